# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

"""Virtual degeneracy and polygonal equalities over finite subsets of l_p.

Coordinates are numbered from 1 in every report. Below p = 1 the distance functional is ||x - y||_p^p
and negative type is tested on it at exponent 1.
"""

import numpy
import scipy.linalg
from sympy import prime

from ..common.config import EPS_WEIGHT, EPS_COORD, RANK_RTOL
from ..common.errors import ExponentMismatch, DegenerateSimplex, ParameterOutOfRange, InvalidPointSet, \
    HypothesisFailed, NumericFailure
from ..common.logs import logger
from ..common.models import FiniteMetricSpace, LpPointSet, SignedSimplex, GapValue, Cluster, CoordinateReport, \
    VDReport, VDKernel, ElsnerReport, PairReport, PropertyEReport, InfVDSReport
from .negtype import has_strict_negative_type
from .simplex import gap, is_degenerate


def lp_distance_matrix(points):
    return FiniteMetricSpace(labels=points.labels, dist=points.dist)


def negtype_exponent(p):
    """Exponent at which l_p strictness is tested on lp_distance_matrix."""
    return p if p >= 1 else 1.0


def _lp_universe(simplex, exponent=None):
    universe = simplex.universe
    if not isinstance(universe, LpPointSet):
        raise ExponentMismatch("simplex universe carries no l_p coordinates")
    if exponent is not None and exponent != universe.p:
        raise ExponentMismatch("simplex lives in l_%g, not l_%g" % (universe.p, exponent))
    return universe


def gamma_p_lp(simplex, exponent=None):
    """Gap with ||x - y||_p^p in place of d(x, y)^p."""
    universe = _lp_universe(simplex, exponent)
    return GapValue(p=universe.p, value=gap(simplex, universe.norm_powers()))


def cluster_values(values, eps=EPS_COORD, exact=False):
    """Group indices of equal scalars. Sorted values start a new cluster when the step exceeds eps."""
    values = numpy.asarray(values, dtype=float)
    order = numpy.argsort(values, kind="mergesort")
    threshold = 0.0 if exact else eps

    clusters = []
    for k in order:
        if clusters and values[k] - values[clusters[-1][-1]] <= threshold:
            clusters[-1].append(int(k))
        else:
            clusters.append([int(k)])
    return clusters


def _signed_weights(simplex):
    universe = _lp_universe(simplex)
    rows = numpy.concatenate([simplex.x_points(), simplex.y_points()])
    m, n = simplex.x_weights(), simplex.y_weights()
    return universe.coords[rows], numpy.concatenate([m, -n]), len(m)


def _coordinate_report(values, alpha, s, omega, eps, eps_c, exact):
    clusters = []
    for members in cluster_values(values, eps_c, exact):
        members = numpy.array(members)
        m = alpha[members[members < s]].sum()
        n = -alpha[members[members >= s]].sum()
        clusters.append(Cluster(value=values[members].mean(), m=m, n=n))

    scale = max(1.0, numpy.abs(alpha).sum())
    degenerate = all(abs(c.m - c.n) <= eps * scale for c in clusters)
    balanced = abs(alpha @ values) <= eps * scale * max(1.0, numpy.abs(values).max())
    return CoordinateReport(omega=omega, clusters=clusters, degenerate=degenerate, balanced=balanced)


def is_virtually_degenerate(simplex, eps=EPS_WEIGHT, eps_c=EPS_COORD, exact=False, runner=None):
    """Check scalar degeneracy of D(omega) for every coordinate omega.

    Values within eps_c of each other fall in one cluster unless exact is set; a coordinate passes when
    every cluster carries as much x weight as y weight.
    """
    if is_degenerate(simplex, eps):
        raise DegenerateSimplex("virtual degeneracy is only defined for non-degenerate simplices")

    coords, alpha, s = _signed_weights(simplex)

    def check(omega):
        return _coordinate_report(coords[:, omega], alpha, s, omega + 1, eps, eps_c, exact)

    omegas = range(coords.shape[1])
    reports = runner.map(check, omegas) if runner is not None else [check(omega) for omega in omegas]
    return VDReport(virtually_degenerate=all(r.degenerate for r in reports), coordinates=reports)


def balance_defect(simplex):
    """sum m_j x_j - sum n_i y_i."""
    coords, alpha, _ = _signed_weights(simplex)
    return alpha @ coords


def is_balanced(simplex, eps=EPS_WEIGHT):
    return bool(numpy.abs(balance_defect(simplex)).max() <= eps)


def vd_kernel(points, eps_c=EPS_COORD, exact=False, rcond=RANK_RTOL):
    """Basis of all weightings alpha whose sum over every coordinate value cluster vanishes."""
    rows = []
    for omega in range(points.dims):
        for members in cluster_values(points.coords[:, omega], eps_c, exact):
            row = numpy.zeros(points.size)
            row[members] = 1.0
            rows.append(row)

    constraints = numpy.array(rows)
    try:
        kernel = scipy.linalg.null_space(constraints, rcond=rcond)
    except (numpy.linalg.LinAlgError, ValueError) as e:
        raise NumericFailure("kernel extraction failed: %s" % e)

    basis = []
    for alpha in kernel.T:
        alpha = alpha / numpy.abs(alpha).max()
        lead = alpha[numpy.flatnonzero(numpy.abs(alpha) > 1e-12)[0]]
        basis.append(alpha if lead > 0 else -alpha)

    # Every cluster sum of every basis vector must vanish
    residual = max((numpy.abs(constraints @ alpha).max() for alpha in basis), default=0.0)
    if residual > EPS_WEIGHT * points.size:
        raise NumericFailure("kernel vectors leave cluster sums of %g" % residual)

    logger.debug("Virtual degeneracy kernel of dimension %d from %d constraints", len(basis), len(rows))
    return VDKernel(basis=basis, constraint_count=len(rows))


def strict_p_negtype_lp(points, eps_c=EPS_COORD, exact=False, eps_eig=None):
    """Strict p-negative type of an l_p point set, 0 < p < 2, as absence of virtually degenerate simplices."""
    if not 0 < points.p < 2:
        raise ParameterOutOfRange("the virtual degeneracy criterion covers 0 < p < 2, got %r" % points.p)

    kernel = vd_kernel(points, eps_c, exact)
    strict = kernel.dimension == 0

    certificate = has_strict_negative_type(lp_distance_matrix(points), negtype_exponent(points.p), eps_eig)
    if certificate.holds != strict:
        logger.warning("Strictness criteria disagree at p=%g: kernel dimension %d, lambda_max=%r",
                       points.p, kernel.dimension, certificate.lambda_max)
    return strict


def _nonzero(vector, name):
    vector = numpy.asarray(vector, dtype=float)
    if vector.ndim != 1 or not numpy.any(vector != 0):
        raise InvalidPointSet("%s must be a non-zero vector" % name)
    return vector


def support(vector, eps=EPS_COORD):
    return numpy.flatnonzero(numpy.abs(vector) > eps)


def disjoint_support_check(u, v, eps=EPS_COORD):
    u, v = _nonzero(u, "u"), _nonzero(v, "v")
    return not numpy.intersect1d(support(u, eps), support(v, eps)).size


def parallelogram_equality_residual(u, v, p):
    u, v = _nonzero(u, "u"), _nonzero(v, "v")

    def norm(w):
        return numpy.sum(numpy.abs(w) ** p)

    return norm(u + v) + norm(u - v) - 2.0 * (norm(u) + norm(v))


def _multiset_rows(family):
    return family[numpy.lexsort(family.T[::-1])]


def elsner_identity_check(xs, ys, p, eps=EPS_WEIGHT, eps_c=EPS_COORD):
    """Compare the polygonal equality of two vector families with per-coordinate multiset equality.

    Both families get weight 1 per vector. Below p = 2 the two answers must agree.
    """
    xs, ys = numpy.atleast_2d(numpy.asarray(xs, dtype=float)), numpy.atleast_2d(numpy.asarray(ys, dtype=float))
    if xs.shape != ys.shape or xs.size == 0:
        raise InvalidPointSet("families must both hold N >= 1 vectors of equal length")
    if not p > 0:
        raise ParameterOutOfRange("exponent must be positive, got %r" % p)
    if numpy.allclose(_multiset_rows(xs), _multiset_rows(ys), rtol=0, atol=eps_c):
        raise DegenerateSimplex("the two families coincide as multisets")

    def norms(a, b):
        return (numpy.abs(a[:, None, :] - b[None, :, :]) ** p).sum(axis=2)

    cross = norms(xs, ys).sum()
    within = (norms(xs, xs).sum() + norms(ys, ys).sum()) / 2.0
    residual = cross - within

    equality_holds = abs(residual) <= eps * max(1.0, cross)
    identical = all(numpy.allclose(numpy.sort(xs[:, omega]), numpy.sort(ys[:, omega]), rtol=0, atol=eps_c)
                    for omega in range(xs.shape[1]))

    agreement_expected = p < 2
    if agreement_expected and equality_holds != identical:
        logger.warning("Polygonal equality (%s) and per-coordinate identity (%s) disagree at p=%g",
                       equality_holds, identical, p)

    return ElsnerReport(p=p, equality_holds=equality_holds, per_coordinate_identical=identical,
                        residual=residual, agreement_expected=agreement_expected)


def lemma_pair_hypotheses(u, v, eps=EPS_COORD):
    """Return (kappa, failed) for the intersecting-support construction.

    failed names the first hypothesis that does not hold, or is None. kappa satisfies
    kappa * u[v] = v[u] on the shared support when the restrictions are dependent.
    """
    u, v = _nonzero(u, "u"), _nonzero(v, "v")
    if u.shape != v.shape:
        raise InvalidPointSet("u and v must have the same length")

    singular = scipy.linalg.svd(numpy.vstack([u, v]), compute_uv=False)
    if singular[-1] <= RANK_RTOL * singular[0]:
        return None, "linear_independence"

    shared = numpy.intersect1d(support(u, eps), support(v, eps))
    if not shared.size:
        return None, "intersecting_support"

    u_s, v_s = u[shared], v[shared]
    kappa = (u_s @ v_s) / (u_s @ u_s)
    if numpy.abs(kappa * u_s - v_s).max() > eps * max(1.0, numpy.abs(v_s).max()):
        return None, "dependent_restrictions"
    return kappa, None


def construct_vds_pair(u, v, p=1.0, eps=EPS_COORD, exact=False):
    """The (3, 3) virtually degenerate simplex spanned by u and v."""
    kappa, failed = lemma_pair_hypotheses(u, v, eps)
    if failed:
        raise HypothesisFailed(failed, "u=%s v=%s: %s does not hold" % (list(u), list(v), failed))

    u, v = numpy.asarray(u, dtype=float), numpy.asarray(v, dtype=float)
    coords = [kappa * u - v, -kappa * u, v, v - kappa * u, kappa * u, -v]
    simplex = SignedSimplex(universe=LpPointSet(p=p, coords=coords),
                            xs=[(0, 1), (1, 1), (2, 1)],
                            ys=[(3, 1), (4, 1), (5, 1)])

    if not is_virtually_degenerate(simplex, eps_c=eps, exact=exact).virtually_degenerate:
        raise NumericFailure("constructed simplex failed the virtual degeneracy check (kappa=%r)" % kappa)
    return simplex


def construct_disjoint_pair(u, v, p=1.0, eps=EPS_COORD):
    """[0(1), u+v(1); u(1), v(1)] over disjointly supported u and v."""
    if not disjoint_support_check(u, v, eps):
        raise HypothesisFailed("disjoint_support", "u and v share support")

    u, v = numpy.asarray(u, dtype=float), numpy.asarray(v, dtype=float)
    return SignedSimplex(universe=LpPointSet(p=p, coords=[numpy.zeros_like(u), u + v, u, v]),
                         xs=[(0, 1), (1, 1)],
                         ys=[(2, 1), (3, 1)])


def _pair_report(generators, first, second, eps):
    u, v = generators[first], generators[second]
    shared = numpy.intersect1d(support(u, eps), support(v, eps))
    kappa, failed = lemma_pair_hypotheses(u, v, eps)
    return PairReport(first=first + 1, second=second + 1, shared_support=shared + 1,
                      disjoint=not shared.size, kappa=kappa, lemma_hypotheses=failed is None)


def property_e_report(generators, eps=EPS_COORD):
    """Pairwise support analysis of a finite generating set.

    A disjointly supported pair gives Property E; a pair meeting the intersecting-support hypotheses gives
    a virtually degenerate simplex. Either rules out strict p-negative type of the span for 0 < p < 2.
    """
    generators = numpy.atleast_2d(numpy.asarray(generators, dtype=float))
    for k, g in enumerate(generators):
        _nonzero(g, "generator %d" % (k + 1))

    pairs = [_pair_report(generators, j, i, eps)
             for j in range(len(generators)) for i in range(j + 1, len(generators))]
    return PropertyEReport(pairs=pairs,
                           property_e=any(pair.disjoint for pair in pairs),
                           lemma_pairs=any(pair.lemma_hypotheses for pair in pairs))


INFVDS_VARIANTS = ("dyadic", "prime")


def infvds_basis(count, dims, variant="dyadic", p=1.0):
    """Truncated generators x_n(l) = b^-l when the n-th prime divides l, l = 1..dims.

    b is 2 for the dyadic basis and the n-th prime itself for the prime variant. Support is taken exactly
    since entries shrink well below any coordinate tolerance.
    """
    if variant not in INFVDS_VARIANTS:
        raise ParameterOutOfRange("unknown variant %r, expected one of %s" % (variant, ", ".join(INFVDS_VARIANTS)))
    if count < 1:
        raise ParameterOutOfRange("count must be at least 1, got %r" % count)

    primes = [prime(n) for n in range(1, count + 1)]
    # The first shared support, 2 * 3, is the floor even for a single generator
    needed = primes[-2] * primes[-1] if count > 1 else 6
    if dims < needed:
        raise ParameterOutOfRange("dims=%d hides pairwise shared supports, need at least %d" % (dims, needed))

    l = numpy.arange(1, dims + 1)
    rows = []
    for pn in primes:
        base = 2.0 if variant == "dyadic" else float(pn)
        rows.append(numpy.where(l % pn == 0, base ** -l.astype(float), 0.0))

    generators = numpy.array(rows)
    report = property_e_report(generators, eps=0.0)
    return InfVDSReport(points=LpPointSet(p=p, coords=generators), truncation=dims, variant=variant,
                        pairs=report.pairs)
