# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

"""Negative type certificates.

A finite space has p-negative type when sum_{j,i} d(z_j, z_i)^p a_j a_i <= 0 for every weighting a
summing to zero. The test restricts D_p to the hyperplane of zero-sum weightings through a basis B
and looks at the eigenvalues of the pencil (B^T D_p B, B^T B), which are the extreme values of the form
over unit zero-sum weightings whatever basis is used.
"""

import numpy
import scipy.linalg

from ..common.config import EPS_EIG_SCALE, TOL_P, P_MAX, EPS_WEIGHT
from ..common.errors import NumericFailure, NegativeTypeFails, PreconditionFailed, ParameterOutOfRange, InputError
from ..common.logs import logger
from ..common.models import NegTypeForm, Certificate, RoundnessReport, EqualityWitness, ObstructionReport, \
    SchoenbergReport
from .simplex import gamma_p, is_degenerate


def difference_basis(n):
    """Columns e_k - e_{k+1}, k = 1..n-1."""
    basis = numpy.zeros((n, max(n - 1, 0)))
    for k in range(n - 1):
        basis[k, k] = 1.0
        basis[k + 1, k] = -1.0
    return basis


def mean_centered_basis(n):
    """Columns e_k - (1/n) 1, k = 1..n-1."""
    return numpy.eye(n)[:, :max(n - 1, 0)] - 1.0 / n


BASES = dict(difference=difference_basis,
             mean_centered=mean_centered_basis)


def negative_type_form(space, p, basis="difference"):
    if p < 0:
        raise ParameterOutOfRange("negative type exponent must be non-negative, got %r" % p)

    matrix = space.distance_powers(p)
    b = BASES[basis](space.size)
    projected = b.T @ matrix @ b
    projected = (projected + projected.T) / 2.0
    return NegTypeForm(p=p, matrix=matrix, basis=b, projected=projected)


def _spectrum(form):
    gram = form.basis.T @ form.basis
    try:
        return scipy.linalg.eigh(form.projected, gram)
    except (numpy.linalg.LinAlgError, ValueError) as e:
        raise NumericFailure("eigen decomposition failed at p=%r: %s" % (form.p, e))


def _tolerance(eigenvalues, eps_eig):
    if eps_eig is not None:
        return eps_eig
    scale = numpy.abs(eigenvalues).max() if len(eigenvalues) else 0.0
    return EPS_EIG_SCALE * max(1.0, scale)


def _certificate(space, p, eps_eig, basis, strict):
    form = negative_type_form(space, p, basis)
    if space.size < 2:
        # No non-zero weighting sums to zero
        return Certificate(p=p, holds=True, lambda_max=None, eps_eig=_tolerance([], eps_eig))

    eigenvalues, _ = _spectrum(form)
    eps = _tolerance(eigenvalues, eps_eig)
    lambda_max = eigenvalues[-1]
    holds = lambda_max <= -eps if strict else lambda_max <= eps
    return Certificate(p=p, holds=holds, lambda_max=lambda_max, eps_eig=eps)


def has_negative_type(space, p, eps_eig=None, basis="difference"):
    return _certificate(space, p, eps_eig, basis, strict=False)


def has_strict_negative_type(space, p, eps_eig=None, basis="difference"):
    return _certificate(space, p, eps_eig, basis, strict=True)


def negative_type_profile(space, ps, eps_eig=None, runner=None, strict=False):
    """Certificates over a grid of exponents. Exponents are independent and may run on a runner."""
    check = has_strict_negative_type if strict else has_negative_type

    def certify(p):
        return check(space, p, eps_eig)

    if runner is None:
        return [certify(p) for p in ps]
    return runner.map(certify, ps)


def generalized_roundness(space, p_max=P_MAX, tol_p=TOL_P, eps_eig=None):
    """Bisect the monotone negative type predicate on [0, p_max]."""
    if not p_max > 0:
        raise ParameterOutOfRange("p_max must be positive, got %r" % p_max)

    low = has_negative_type(space, 0.0, eps_eig)
    if not low.holds:
        raise InputError("negative type fails at p=0, the input is not a metric space")

    top = has_negative_type(space, p_max, eps_eig)
    if top.holds:
        return RoundnessReport(roundness=p_max, at_cap=True, iterations=0, p_max=p_max, tol_p=tol_p,
                               certificate_low=top)

    high = top
    iterations = 0
    while high.p - low.p > tol_p:
        middle = has_negative_type(space, (low.p + high.p) / 2.0, eps_eig)
        logger.debug("Roundness bisection p=%.9f lambda_max=%r holds=%s", middle.p, middle.lambda_max, middle.holds)
        if middle.holds:
            low = middle
        else:
            high = middle
        iterations += 1

    return RoundnessReport(roundness=(low.p + high.p) / 2.0, at_cap=False, iterations=iterations,
                           p_max=p_max, tol_p=tol_p, certificate_low=low, certificate_high=high,
                           witnesses=_bracket_witnesses(space, low))


def _bracket_witnesses(space, low):
    if low.p == 0:
        return []
    # The top eigenvalue at the low end is only within the bracket width of zero, not within eps
    band = low.eps_eig if low.lambda_max is None else max(low.eps_eig, -low.lambda_max)
    return equality_witnesses(space, low.p, band * (1 + 1e-6))


def _normalize(alpha):
    # max |entry| = 1, first non-negligible entry positive
    alpha = alpha / numpy.abs(alpha).max()
    lead = alpha[numpy.flatnonzero(numpy.abs(alpha) > 1e-12)[0]]
    return alpha if lead > 0 else -alpha


def equality_witnesses(space, p, eps_eig=None, basis="difference"):
    """Weightings spanning the zero-sum directions on which the form vanishes.

    Each witness is a non-trivial p-polygonal equality; the list is empty exactly when the space has
    strict p-negative type.
    """
    form = negative_type_form(space, p, basis)
    if space.size < 2:
        return []

    eigenvalues, vectors = _spectrum(form)
    eps = _tolerance(eigenvalues, eps_eig)
    if eigenvalues[-1] > eps:
        raise NegativeTypeFails("p=%r: largest eigenvalue %r exceeds %r" % (p, eigenvalues[-1], eps))

    # Generalized eigenvectors are B^T B-orthonormal, so B v has unit length and |residual| <= n * eps
    tolerance = space.size * eps
    witnesses = []
    for k in numpy.flatnonzero(numpy.abs(eigenvalues) <= eps):
        alpha = _normalize(form.basis @ vectors[:, k])
        residual = alpha @ form.matrix @ alpha
        witnesses.append(EqualityWitness(alpha=alpha, p=p, residual=residual, tolerance=tolerance))
    return witnesses


def embedding_obstruction(source, witness, q, eps_eig=None):
    """Strict q-negative type (q >= p) rules out an isometry onto any space carrying the witness."""
    p = witness.p
    if q < p:
        raise ParameterOutOfRange("q=%r must be at least the witness exponent p=%r" % (q, p))

    strict_q = has_strict_negative_type(source, q, eps_eig)
    if not strict_q.holds:
        raise PreconditionFailed("source does not have strict %r-negative type (lambda_max=%r)"
                                 % (q, strict_q.lambda_max))

    strict_p = has_strict_negative_type(source, p, eps_eig)
    if not strict_p.holds:
        logger.warning("Source is strict at q=%r but the direct check at p=%r failed (lambda_max=%r)",
                       q, p, strict_p.lambda_max)

    reasons = [
        "source has strict %g-negative type (lambda_max=%.3e <= -%.3e)" % (q, strict_q.lambda_max, strict_q.eps_eig),
        "q-negative type implies strict p'-negative type for every p' < q, and strictness at q itself "
        "covers p' = q, so the source is strict at p=%g" % p,
        "direct check at p=%g: strict=%s" % (p, strict_p.holds),
        "the host admits a non-trivial %g-polygonal equality with residual %.3e" % (p, witness.residual),
        "an isometric copy of the source would inherit that equality, contradicting strictness",
    ]
    return ObstructionReport(verdict=strict_p.holds, p=p, q=q, source_strict_q=strict_q,
                             source_strict_p=strict_p, witness=witness, reasons=reasons)


def positive_gap_exponent(simplex, ps, eps=EPS_WEIGHT):
    """First exponent of the grid with gamma_p > eps, or None.

    A non-degenerate simplex in a metric space always has some p > 0 with a positive gap.
    """
    if is_degenerate(simplex, eps):
        return None
    for p in ps:
        if gamma_p(simplex, p).value > eps:
            return p
    return None


def schoenberg_check(space, eps_eig=None):
    """Isometric embedding into Euclidean space via the double-centred squared distance matrix."""
    n = space.size
    centering = numpy.eye(n) - numpy.ones((n, n)) / n
    gram = -centering @ space.distance_powers(2) @ centering / 2.0
    gram = (gram + gram.T) / 2.0

    try:
        eigenvalues, vectors = scipy.linalg.eigh(gram)
    except (numpy.linalg.LinAlgError, ValueError) as e:
        raise NumericFailure("eigen decomposition failed: %s" % e)

    eps = _tolerance(eigenvalues, eps_eig)
    embeddable = eigenvalues[0] >= -eps
    coordinates = None
    if embeddable:
        keep = eigenvalues > eps
        coordinates = vectors[:, keep] * numpy.sqrt(eigenvalues[keep])
    return SchoenbergReport(embeddable=embeddable, min_eigenvalue=eigenvalues[0], tolerance=eps,
                            coordinates=coordinates)


def euclidean_embedding(space, eps_eig=None):
    """Classical scaling coordinates, one row per point."""
    report = schoenberg_check(space, eps_eig)
    if not report.embeddable:
        raise NegativeTypeFails("no isometric Euclidean embedding, smallest Gram eigenvalue %r"
                                % report.min_eigenvalue)
    return report.coordinates
