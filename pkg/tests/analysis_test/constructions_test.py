# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

from os.path import join
from tempfile import TemporaryDirectory
from unittest import TestCase
from unittest.mock import MagicMock, call

from polygonal.analysis.constructions import KINDS, build_fixtures, write_fixtures
from polygonal.analysis.lp import is_virtually_degenerate, is_balanced
from polygonal.common import Storage, LpPointSet, FiniteMetricSpace
from polygonal.common.errors import ParameterOutOfRange


class BuildTest(TestCase):

    def test_every_kind_builds_with_defaults(self):
        for kind in KINDS:
            fixtures = build_fixtures(kind)
            self.assertTrue(fixtures, kind)

    def test_counterexample4(self):
        fixtures = build_fixtures("counterexample4")

        self.assertEqual(fixtures["points"].coords.tolist(), [[0, 0], [1, 1], [3, 1], [2, 0]])
        self.assertTrue(is_balanced(fixtures["simplex"]))
        self.assertFalse(is_virtually_degenerate(fixtures["simplex"]).virtually_degenerate)

    def test_vds_pair(self):
        fixtures = build_fixtures("vds-pair")

        self.assertEqual(list(fixtures), ["generators", "points", "simplex"])
        self.assertEqual(fixtures["generators"].coords.tolist(), [[1, 1, 0], [0, 1, 1]])
        self.assertIs(fixtures["simplex"].universe, fixtures["points"])

    def test_parallelogram_flags(self):
        fixtures = build_fixtures("parallelogram", u=[2, 0, 0], v=[0, 0, 1], p=1.5, count=7, seed=None)

        self.assertEqual(fixtures["points"].p, 1.5)
        self.assertEqual(fixtures["points"].coords.tolist(), [[0, 0, 0], [2, 0, 1], [2, 0, 0], [0, 0, 1]])
        self.assertTrue(is_virtually_degenerate(fixtures["simplex"]).virtually_degenerate)

    def test_infvds(self):
        points = build_fixtures("infvds", count=2, dims=6)["points"]

        self.assertEqual(points.coords.shape, (2, 6))
        self.assertEqual(points.coords[1].tolist(), [0, 0, 2 ** -3, 0, 0, 2 ** -6])

    def test_metric_kinds(self):
        self.assertEqual(build_fixtures("cycle", n=5)["metric"].size, 5)
        self.assertEqual(build_fixtures("ultrametric", n=4, seed=3)["metric"],
                         build_fixtures("ultrametric", n=4, seed=3)["metric"])

    def test_unknown_kind(self):
        with self.assertRaises(ParameterOutOfRange):
            build_fixtures("torus")


class WriteTest(TestCase):

    def test_simplex_names_its_universe(self):
        storage = MagicMock()
        fixtures = build_fixtures("counterexample4")

        paths = write_fixtures(storage, fixtures, "c4")

        self.assertEqual(paths, ["c4-points.json", "c4-simplex.json"])
        storage.write_points.assert_called_once_with(fixtures["points"], "c4-points.json")
        storage.write_simplex.assert_called_once_with(fixtures["simplex"], "c4-simplex.json",
                                                      universe_ref="c4-points.json")

    def test_nested_prefix_refers_by_file_name(self):
        storage = MagicMock()
        fixtures = build_fixtures("parallelogram")

        write_fixtures(storage, fixtures, "out/par")

        self.assertEqual(storage.write_simplex.call_args, call(fixtures["simplex"], "out/par-simplex.json",
                                                               universe_ref="par-points.json"))

    def test_metrics(self):
        storage = MagicMock()

        write_fixtures(storage, build_fixtures("cycle"), "cycle")

        storage.write_metric.assert_called_once_with(build_fixtures("cycle")["metric"], "cycle-metric.json")

    def test_round_trip_is_deterministic(self):
        with TemporaryDirectory() as first, TemporaryDirectory() as second:
            for base in (first, second):
                write_fixtures(Storage(base), build_fixtures("vds-pair"), "vds")

            for name in ("vds-generators.json", "vds-points.json", "vds-simplex.json"):
                with open(join(first, name)) as a, open(join(second, name)) as b:
                    self.assertEqual(a.read(), b.read())

            storage = Storage(first)
            simplex = storage.read_simplex("vds-simplex.json")
            self.assertIsInstance(simplex.universe, LpPointSet)
            self.assertEqual(simplex, build_fixtures("vds-pair")["simplex"])
            self.assertTrue(is_virtually_degenerate(simplex).virtually_degenerate)

    def test_read_back_metric(self):
        with TemporaryDirectory() as base:
            write_fixtures(Storage(base), build_fixtures("ultrametric", n=5, seed=1), "um")

            space = Storage(base).read_space(join(base, "um-metric.json"))
            self.assertIsInstance(space, FiniteMetricSpace)
            self.assertEqual(space, build_fixtures("ultrametric", n=5, seed=1)["metric"])
