# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

import numpy
import scipy.linalg

from ..common.config import EPS_CLASSIFY, EPS_WEIGHT, RANK_RTOL
from ..common.errors import ExponentMismatch, InvalidPointSet, InvalidSimplex, NumericFailure
from ..common.logs import logger
from ..common.models import AffineReport, Gamma2Identity, PolygonalClassification
from .lp import gamma_p_lp, balance_defect, lp_distance_matrix
from .negtype import has_strict_negative_type
from .simplex import from_alpha

IDENTITY_RTOL = 1e-10


def _euclidean(simplex):
    return gamma_p_lp(simplex, exponent=2.0).value


def gamma2_identity(simplex, rtol=IDENTITY_RTOL):
    """gamma_2(D) equals the squared norm of sum m_j x_j - sum n_i y_i."""
    gap = _euclidean(simplex)
    lhs = float(numpy.sum(balance_defect(simplex) ** 2))
    return Gamma2Identity(lhs=lhs, gap=gap, holds=abs(lhs - gap) <= rtol * max(1.0, abs(lhs)))


def classify_2_polygonal(simplex, eps=EPS_CLASSIFY):
    """A 2-polygonal equality holds exactly when the simplex is balanced.

    The gap is compared against eps^2 plus the rounding left by its cancelling terms, the defect norm
    against eps.
    """
    gap = _euclidean(simplex)
    defect_norm = float(numpy.linalg.norm(balance_defect(simplex)))

    weights = numpy.concatenate([simplex.x_weights(), simplex.y_weights()])
    spread = numpy.ptp(simplex.universe.coords, axis=0)
    rounding = 64 * numpy.finfo(float).eps * weights.sum() ** 2 * float(spread @ spread)

    return PolygonalClassification(gap_zero=abs(gap) <= eps ** 2 + rounding,
                                   balanced=defect_norm <= eps,
                                   gap=gap, defect_norm=defect_norm)


def _normalize(c):
    c = c / numpy.abs(c).max()
    lead = c[numpy.flatnonzero(numpy.abs(c) > 1e-12)[0]]
    return c if lead > 0 else -c


def affine_dependence(points, rtol=RANK_RTOL):
    """Rank of the differences z_k - z_0 and, when deficient, one affine dependency c.

    The dependency comes from the right singular vector of the smallest singular value, padded with
    c_0 = -(c_1 + ... + c_n).
    """
    if points.size < 2:
        raise InvalidPointSet("affine dependence needs at least 2 points")

    differences = (points.coords[1:] - points.coords[0]).T
    try:
        _, singular, vh = scipy.linalg.svd(differences, full_matrices=True)
    except (numpy.linalg.LinAlgError, ValueError) as e:
        raise NumericFailure("singular value decomposition failed: %s" % e)

    n = differences.shape[1]
    rank = int(numpy.sum(singular > rtol * singular[0])) if singular.size and singular[0] > 0 else 0
    if rank == n:
        return AffineReport(rank=rank, dependent=False)

    tail = vh[-1]
    return AffineReport(rank=rank, dependent=True, dependency=_normalize(numpy.concatenate([[-tail.sum()], tail])))


def balanced_simplex_from_dependency(points, c, eps=EPS_WEIGHT):
    """x-side from positive c_k, y-side from negative c_k; zero entries drop their points."""
    c = numpy.asarray(c, dtype=float)
    if c.shape != (points.size,):
        raise InvalidSimplex("expected %d coefficients, got shape %s" % (points.size, c.shape))
    if not numpy.any(numpy.abs(c) > eps):
        raise InvalidSimplex("dependency must be non-zero")

    scale = max(1.0, numpy.abs(c).sum() * max(1.0, numpy.abs(points.coords).max()))
    if numpy.abs(c @ points.coords).max() > eps * scale:
        raise InvalidSimplex("coefficients do not combine the points to zero")
    return from_alpha(points, c, eps=eps)


def balanced_kernel(points, rcond=RANK_RTOL):
    """Rows spanning every weighting alpha with sum alpha_k = 0 and sum alpha_k z_k = 0."""
    system = numpy.vstack([numpy.ones(points.size), points.coords.T])
    try:
        return scipy.linalg.null_space(system, rcond=rcond).T
    except (numpy.linalg.LinAlgError, ValueError) as e:
        raise NumericFailure("kernel extraction failed: %s" % e)


def strict_2_negtype(points, rtol=RANK_RTOL, eps_eig=None):
    if points.p != 2:
        raise ExponentMismatch("strict 2-negative type needs an l_2 point set, got l_%g" % points.p)

    strict = not affine_dependence(points, rtol).dependent
    certificate = has_strict_negative_type(lp_distance_matrix(points), 2.0, eps_eig)
    if certificate.holds != strict:
        logger.warning("Affine independence (%s) and eigenvalue strictness (%s, lambda_max=%r) disagree",
                       strict, certificate.holds, certificate.lambda_max)
    return strict
