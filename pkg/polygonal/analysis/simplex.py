# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

from collections import defaultdict

import numpy

from ..common.config import EPS_WEIGHT
from ..common.errors import InvalidSimplex, NotCompletelyRefined, ParameterOutOfRange
from ..common.logs import logger
from ..common.models import SignedSimplex, Vertex, RepeatingNumbers, GapValue, Refinement


def repeating_numbers(simplex):
    numbers = defaultdict(lambda: [0.0, 0.0])
    for v in simplex.xs:
        numbers[v.point][0] += v.weight
    for v in simplex.ys:
        numbers[v.point][1] += v.weight

    return RepeatingNumbers(numbers={point: (m, n) for point, (m, n) in numbers.items()})


def is_degenerate(simplex, eps=EPS_WEIGHT):
    return all(abs(m - n) <= eps for m, n in repeating_numbers(simplex).numbers.values())


def is_full(simplex):
    return len({v.point for v in simplex.xs}) == simplex.s and len({v.point for v in simplex.ys}) == simplex.t


def is_pure(simplex):
    return not ({v.point for v in simplex.xs} & {v.point for v in simplex.ys})


def is_completely_refined(simplex):
    return is_full(simplex) and is_pure(simplex) and all(v.weight > 0 for v in simplex.xs + simplex.ys)


def _vertex(vertices, index):
    if not 0 <= index < len(vertices):
        raise InvalidSimplex("vertex index %r out of range" % index)
    return vertices[index]


def refine_merge(simplex, j1, j2, side="x"):
    """Merge two vertices of one half sitting on the same point."""
    if side == "y":
        return refine_merge(simplex.swapped(), j1, j2).swapped()

    first, second = _vertex(simplex.xs, j1), _vertex(simplex.xs, j2)
    if j1 == j2:
        raise InvalidSimplex("cannot merge a vertex with itself")
    if first.point != second.point:
        raise InvalidSimplex("vertices %d and %d reference different points" % (j1, j2))

    keep, drop = sorted((j1, j2))
    xs = list(simplex.xs)
    xs[keep] = Vertex(point=first.point, weight=first.weight + second.weight)
    del xs[drop]
    return SignedSimplex(universe=simplex.universe, xs=xs, ys=simplex.ys)


def refine_cancel(simplex, j, i):
    """Move the whole weight of x_j onto y_i = x_j: x_j(m_j), y_i(n_i) -> x_j(0), y_i(n_i - m_j)."""
    x, y = _vertex(simplex.xs, j), _vertex(simplex.ys, i)
    if x.point != y.point:
        raise InvalidSimplex("x vertex %d and y vertex %d reference different points" % (j, i))

    xs, ys = list(simplex.xs), list(simplex.ys)
    xs[j] = Vertex(point=x.point, weight=0.0)
    ys[i] = Vertex(point=y.point, weight=y.weight - x.weight)
    return SignedSimplex(universe=simplex.universe, xs=xs, ys=ys)


def refine_move(simplex, j, side="x"):
    """Zero out a vertex and append its negated weight on the opposite half."""
    if side == "y":
        return refine_move(simplex.swapped(), j).swapped()

    x = _vertex(simplex.xs, j)
    xs = list(simplex.xs)
    xs[j] = Vertex(point=x.point, weight=0.0)
    ys = list(simplex.ys) + [Vertex(point=x.point, weight=-x.weight)]
    return SignedSimplex(universe=simplex.universe, xs=xs, ys=ys)


def _rebalanced(universe, xs, ys):
    """Build a simplex from retained (point, weight) pairs.

    Weights dropped under the tolerance leave the halves with slightly different totals; both halves
    are rescaled to the mean total so the result is a valid simplex.
    """
    total_x, total_y = sum(w for _, w in xs), sum(w for _, w in ys)
    if total_x != total_y:
        target = (total_x + total_y) / 2.0
        xs = [(z, w * target / total_x) for z, w in xs]
        ys = [(z, w * target / total_y) for z, w in ys]
    return SignedSimplex(universe=universe, xs=xs, ys=ys)


def complete_refine(simplex, eps=EPS_WEIGHT):
    """Reduce to the unique completely refined simplex, or report degeneracy.

    x-side: points with m(z) > n(z) weighted m(z) - n(z); y-side: points with m(z) < n(z) weighted
    n(z) - m(z). Differences within eps count as zero. Vertices are sorted by point index.
    """
    numbers = repeating_numbers(simplex).numbers
    xs = [(z, m - n) for z, (m, n) in numbers.items() if m - n > eps]
    ys = [(z, n - m) for z, (m, n) in numbers.items() if n - m > eps]

    if not xs and not ys:
        return Refinement(degenerate=True)
    if not xs or not ys:
        logger.warning("Residual weight on one half only, below tolerance on the other; reporting degenerate")
        return Refinement(degenerate=True)

    return Refinement(degenerate=False, simplex=_rebalanced(simplex.universe, xs, ys))


def _merge_duplicates(simplex, side="x"):
    vertices = simplex.xs if side == "x" else simplex.ys
    seen = {}
    for j, v in enumerate(vertices):
        if v.point in seen:
            return _merge_duplicates(refine_merge(simplex, seen[v.point], j, side=side), side)
        seen[v.point] = j
    return simplex


def refine_by_procedures(simplex, eps=EPS_WEIGHT):
    """Complete refinement by literally chaining the three procedures.

    Merges make the simplex full, cancellations leave at most one non-zero weight per shared point,
    moves flip negative weights to the other half. Kept as an independent check of complete_refine.
    """
    current = _merge_duplicates(_merge_duplicates(simplex, "x"), "y")

    for z in sorted({v.point for v in current.xs} & {v.point for v in current.ys}):
        j = next(k for k, v in enumerate(current.xs) if v.point == z)
        i = next(k for k, v in enumerate(current.ys) if v.point == z)
        if current.xs[j].weight <= current.ys[i].weight:
            current = refine_cancel(current, j, i)
        else:
            current = refine_cancel(current.swapped(), i, j).swapped()

    for j in range(current.s):
        if current.xs[j].weight < 0:
            current = refine_move(current, j)
    for i in range(current.t):
        if current.ys[i].weight < 0:
            current = refine_move(current, i, side="y")

    xs = sorted(((v.point, v.weight) for v in current.xs if v.weight > eps))
    ys = sorted(((v.point, v.weight) for v in current.ys if v.weight > eps))
    if not xs or not ys:
        return Refinement(degenerate=True)

    reduced = _rebalanced(simplex.universe, xs, ys)
    return Refinement(degenerate=False, simplex=_merge_duplicates(_merge_duplicates(reduced, "x"), "y"))


def equivalent(first, second, eps=EPS_WEIGHT):
    """Same canonical complete refinement. All degenerate simplices are equivalent to each other."""
    a, b = complete_refine(first, eps), complete_refine(second, eps)
    if a.degenerate or b.degenerate:
        return a.degenerate and b.degenerate

    def canonical(vertices):
        return [v.point for v in vertices], numpy.array([v.weight for v in vertices])

    for mine, theirs in ((a.simplex.xs, b.simplex.xs), (a.simplex.ys, b.simplex.ys)):
        (points_a, weights_a), (points_b, weights_b) = canonical(mine), canonical(theirs)
        if points_a != points_b or not numpy.allclose(weights_a, weights_b, rtol=0, atol=eps):
            return False
    return True


def gap(simplex, kernel):
    """Gap of a simplex for an arbitrary zero-diagonal kernel matrix over its universe."""
    xi, yi = simplex.x_points(), simplex.y_points()
    m, n = simplex.x_weights(), simplex.y_weights()

    cross = m @ kernel[numpy.ix_(xi, yi)] @ n
    # Diagonal entries vanish, so half the full quadratic form is the sum over j1 < j2
    within = (m @ kernel[numpy.ix_(xi, xi)] @ m + n @ kernel[numpy.ix_(yi, yi)] @ n) / 2.0
    return cross - within


def gamma_p(simplex, p):
    if p < 0:
        raise ParameterOutOfRange("gap exponent must be non-negative, got %r" % p)
    return GapValue(p=p, value=gap(simplex, simplex.universe.distance_powers(p)))


def to_alpha(simplex):
    """Weight vector over z = (x_1..x_s, y_1..y_t): alpha = (m_1..m_s, -n_1..-n_t)."""
    if not is_completely_refined(simplex):
        raise NotCompletelyRefined("only completely refined simplices have an alpha form")

    points = [v.point for v in simplex.xs] + [v.point for v in simplex.ys]
    alpha = numpy.concatenate([simplex.x_weights(), -simplex.y_weights()])
    return points, alpha


def from_alpha(universe, alpha, points=None, eps=EPS_WEIGHT):
    """Split a zero-sum weighting by sign. Entries within eps of zero are dropped with their points."""
    alpha = numpy.asarray(alpha, dtype=float)
    points = list(range(universe.size)) if points is None else list(points)
    if len(points) != len(alpha):
        raise InvalidSimplex("expected one weight per point")

    if abs(alpha.sum()) > eps * max(1.0, numpy.abs(alpha).sum()):
        raise InvalidSimplex("weights must sum to zero, got %r" % alpha.sum())
    if not numpy.any(alpha > eps) or not numpy.any(alpha < -eps):
        raise InvalidSimplex("weights need at least one positive and one negative entry")

    xs = [(z, a) for z, a in zip(points, alpha) if a > eps]
    ys = [(z, -a) for z, a in zip(points, alpha) if a < -eps]
    return _rebalanced(universe, xs, ys)
