# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

from os.path import join, dirname

import numpy

from polygonal.common.models import FiniteMetricSpace, LpPointSet, SignedSimplex


def file_path(relative, file):
    return join(dirname(relative), file)


def read_file(relative, file):
    full_path = file_path(relative, file)
    with open(full_path, 'r') as fp:
        return fp.read()


def euclidean_space(coords):
    coords = numpy.asarray(coords, dtype=float)
    dist = numpy.sqrt(((coords[:, None, :] - coords[None, :, :]) ** 2).sum(axis=2))
    return FiniteMetricSpace(labels=["e%d" % k for k in range(len(coords))], dist=dist)


def random_metric(rng, n, low=1.0, high=2.0):
    """Shortest-path closure of random positive weights."""
    dist = rng.uniform(low, high, size=(n, n))
    dist = (dist + dist.T) / 2.0
    numpy.fill_diagonal(dist, 0.0)
    for k in range(n):
        dist = numpy.minimum(dist, dist[:, k:k + 1] + dist[k:k + 1, :])
    return FiniteMetricSpace(labels=["r%d" % k for k in range(n)], dist=dist)


def random_point_set(rng, n, dims, p, low=-3, high=4):
    """n distinct integer points."""
    while True:
        coords = rng.randint(low, high, size=(n, dims))
        if len({tuple(row) for row in coords}) == n:
            return LpPointSet(p=p, coords=coords)


def random_simplex(rng, universe, max_vertices=4, low=0.1, high=3.0):
    """Positive weights, one side rescaled so the totals match. Points may repeat."""
    s, t = rng.randint(1, max_vertices + 1, size=2)
    m = rng.uniform(low, high, size=s)
    n = rng.uniform(low, high, size=t)
    n = n * m.sum() / n.sum()
    xs = list(zip(rng.randint(0, universe.size, size=s), m))
    ys = list(zip(rng.randint(0, universe.size, size=t), n))
    return SignedSimplex(universe=universe, xs=xs, ys=ys)


def random_signed_simplex(rng, universe, max_vertices=4, bound=3.0):
    """Weights in [-bound, bound]; the last y weight absorbs the imbalance."""
    s, t = rng.randint(1, max_vertices + 1, size=2)
    m = rng.uniform(-bound, bound, size=s)
    n = rng.uniform(-bound, bound, size=t)
    n[-1] += m.sum() - n.sum()
    xs = list(zip(rng.randint(0, universe.size, size=s), m))
    ys = list(zip(rng.randint(0, universe.size, size=t), n))
    return SignedSimplex(universe=universe, xs=xs, ys=ys)
