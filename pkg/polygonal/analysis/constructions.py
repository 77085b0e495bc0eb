# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

"""Named example spaces and simplices, written out as fixture files."""

from collections import OrderedDict
from inspect import signature
from os.path import basename

from ..common.errors import ParameterOutOfRange
from ..common.logs import logger
from ..common.models import FiniteMetricSpace, LpPointSet, SignedSimplex
from .lp import construct_disjoint_pair, construct_vds_pair, infvds_basis
from .metric import cycle_metric, random_ultrametric

# Balanced but not virtually degenerate: (0,0) + (3,1) = (1,1) + (2,0)
COUNTEREXAMPLE4 = [[0, 0], [1, 1], [3, 1], [2, 0]]


def parallelogram(u=(1, 0), v=(0, 1), p=1.0):
    simplex = construct_disjoint_pair(u, v, p)
    return OrderedDict([("points", simplex.universe), ("simplex", simplex)])


def counterexample4(p=1.0):
    points = LpPointSet(p=p, coords=COUNTEREXAMPLE4)
    simplex = SignedSimplex(universe=points, xs=[(0, 1), (2, 1)], ys=[(1, 1), (3, 1)])
    return OrderedDict([("points", points), ("simplex", simplex)])


def vds_pair(u=(1, 1, 0), v=(0, 1, 1), p=1.0):
    simplex = construct_vds_pair(u, v, p)
    return OrderedDict([("generators", LpPointSet(p=p, coords=[u, v])),
                        ("points", simplex.universe),
                        ("simplex", simplex)])


def infvds(count=2, dims=6, variant="dyadic", p=1.0):
    return OrderedDict([("points", infvds_basis(count, dims, variant, p).points)])


def cycle(n=4):
    return OrderedDict([("metric", cycle_metric(n))])


def ultrametric(n=6, seed=0):
    return OrderedDict([("metric", random_ultrametric(n, seed))])


KINDS = OrderedDict([("parallelogram", parallelogram),
                     ("counterexample4", counterexample4),
                     ("vds-pair", vds_pair),
                     ("infvds", infvds),
                     ("cycle", cycle),
                     ("ultrametric", ultrametric)])


def build_fixtures(kind, **flags):
    """Run the builder for kind with the flags it accepts. Flags left as None keep the builder default."""
    if kind not in KINDS:
        raise ParameterOutOfRange("unknown kind %r, expected one of %s" % (kind, ", ".join(KINDS)))

    builder = KINDS[kind]
    accepted = signature(builder).parameters
    return builder(**{name: value for name, value in flags.items() if name in accepted and value is not None})


def write_fixtures(storage, fixtures, prefix):
    """Write each fixture to <prefix>-<name>.json; simplices name their universe file."""
    paths = OrderedDict((name, "%s-%s.json" % (prefix, name)) for name in fixtures)
    universes = {id(item): basename(paths[name])
                 for name, item in fixtures.items() if not isinstance(item, SignedSimplex)}

    for name, item in fixtures.items():
        if isinstance(item, LpPointSet):
            storage.write_points(item, paths[name])
        elif isinstance(item, FiniteMetricSpace):
            storage.write_metric(item, paths[name])
        else:
            storage.write_simplex(item, paths[name], universe_ref=universes.get(id(item.universe)))
        logger.info("Wrote %s fixture %s", name, paths[name])

    return list(paths.values())
