# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

import numpy

from ..common.config import EPS_TRIANGLE
from ..common.errors import MalformedMatrix, InvalidMetric, ParameterOutOfRange
from ..common.models import FiniteMetricSpace, Violation


def validate_metric(dist, eps=EPS_TRIANGLE, labels=None):
    """Check the metric axioms on a square distance matrix.

    Returns (space, violations) with space set to None whenever a violation was found. Every violated
    axiom is listed with the offending indices; triangle violations name (j, i, k) for
    d(j, i) > d(j, k) + d(k, i) + eps with j < i.
    """
    try:
        dist = numpy.array(dist, dtype=float)
    except (TypeError, ValueError):
        raise MalformedMatrix("distances must form a real matrix")

    if dist.ndim != 2 or dist.shape[0] != dist.shape[1] or dist.shape[0] < 1:
        raise MalformedMatrix("distance matrix must be square and non-empty, got shape %s" % (dist.shape,))
    if not numpy.all(numpy.isfinite(dist)):
        raise MalformedMatrix("distance matrix entries must be finite")

    n = len(dist)
    labels = list(labels) if labels is not None else ["v%d" % k for k in range(n)]
    if len(labels) != n:
        raise MalformedMatrix("expected %d labels, got %d" % (n, len(labels)))

    violations = []
    for j in numpy.flatnonzero(numpy.diag(dist) != 0):
        violations.append(Violation(axiom="zero_diagonal", indices=[j]))

    for j, i in numpy.argwhere(numpy.triu(dist != dist.T, k=1)):
        violations.append(Violation(axiom="symmetry", indices=[j, i]))

    off = ~numpy.eye(n, dtype=bool)
    for j, i in numpy.argwhere(off & (dist <= 0)):
        violations.append(Violation(axiom="positivity", indices=[j, i]))

    for j, i, k in _triangle_violations(dist, eps):
        violations.append(Violation(axiom="triangle", indices=[j, i, k]))

    if violations:
        return None, violations
    return FiniteMetricSpace(labels=labels, dist=dist), []


def _triangle_violations(dist, eps):
    # via[j, i, k] = d(j, k) + d(k, i)
    via = dist[:, None, :] + dist.T[None, :, :]
    broken = dist[:, :, None] > via + eps
    return [(j, i, k) for j, i, k in numpy.argwhere(broken) if j < i]


def validated(space, eps=EPS_TRIANGLE):
    """Revalidate a space loaded from a file, raising InvalidMetric with the violations."""
    checked, violations = validate_metric(space.dist, eps, labels=space.labels)
    if violations:
        raise InvalidMetric(violations)
    return checked


def metric_transform(space, p):
    """Replace every distance by d^(p/2). Only 0 <= p <= 2 is guaranteed to give a metric."""
    if not 0 <= p <= 2:
        raise ParameterOutOfRange("metric transform exponent must lie in [0, 2], got %r" % p)

    transformed = space.distance_powers(p / 2.0)
    return validated(FiniteMetricSpace(labels=space.labels, dist=transformed),
                     eps=EPS_TRIANGLE * max(1.0, transformed.max()))


def cycle_metric(n):
    """Shortest-path metric of the n-cycle graph."""
    if n < 3:
        raise ParameterOutOfRange("a cycle needs at least 3 vertices, got %r" % n)

    steps = numpy.abs(numpy.subtract.outer(numpy.arange(n), numpy.arange(n)))
    return FiniteMetricSpace(labels=["v%d" % k for k in range(n)],
                             dist=numpy.minimum(steps, n - steps))


def random_ultrametric(n, seed):
    """Ultrametric on n points from a random binary merge tree.

    Clusters are merged pairwise at strictly increasing heights in (1, 2.5], so level diameters strictly
    decrease going down the tree. The narrow height range keeps d^p well conditioned up to p = 16.
    Deterministic for a fixed seed.
    """
    if n < 2:
        raise ParameterOutOfRange("an ultrametric needs at least 2 points, got %r" % n)

    rng = numpy.random.RandomState(seed)
    steps = rng.uniform(0.1, 1.0, size=n - 1)
    heights = 1.0 + 1.5 * numpy.cumsum(steps) / steps.sum()

    dist = numpy.zeros((n, n))
    clusters = [[k] for k in range(n)]
    for height in heights:
        a, b = sorted(rng.choice(len(clusters), size=2, replace=False))
        for j in clusters[a]:
            for i in clusters[b]:
                dist[j, i] = dist[i, j] = height
        clusters[a] = clusters[a] + clusters.pop(b)

    return FiniteMetricSpace(labels=["u%d" % k for k in range(n)], dist=dist)


def is_ultrametric(space, eps=0.0):
    dist = space.dist
    via = numpy.maximum(dist[:, None, :], dist.T[None, :, :])
    return not numpy.any(dist[:, :, None] > via + eps)
