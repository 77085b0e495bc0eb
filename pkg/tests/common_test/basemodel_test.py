# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

from unittest import TestCase

from polygonal.common.errors import InvalidSimplex, InvalidPointSet
from polygonal.common.models import FiniteMetricSpace, LpPointSet, SignedSimplex, Vertex, Certificate


class ModelTest(TestCase):

    def test_equality_compares_arrays_elementwise(self):
        a = FiniteMetricSpace(labels=["a", "b"], dist=[[0, 1], [1, 0]])
        b = FiniteMetricSpace(labels=["a", "b"], dist=[[0.0, 1.0], [1.0, 0.0]])
        c = FiniteMetricSpace(labels=["a", "b"], dist=[[0, 2], [2, 0]])

        self.assertEqual(a, b)
        self.assertNotEqual(a, c)

    def test_models_are_frozen(self):
        space = FiniteMetricSpace(labels=["a", "b"], dist=[[0, 1], [1, 0]])

        with self.assertRaises(AttributeError):
            space.labels = ["c", "d"]
        with self.assertRaises(ValueError):
            space.dist[0, 1] = 3

    def test_str_names_the_model(self):
        self.assertEqual(str(Vertex(point=2, weight=1.5)), "Vertex('point': 2, 'weight': 1.5)")

    def test_models_of_different_types_differ(self):
        self.assertNotEqual(Vertex(point=0, weight=1), Certificate(p=0, holds=True, lambda_max=None, eps_eig=1))


class SignedSimplexTest(TestCase):

    def setUp(self):
        self.universe = FiniteMetricSpace(labels=["a", "b", "c"], dist=[[0, 1, 1], [1, 0, 1], [1, 1, 0]])

    def test_accepts_tuples(self):
        simplex = SignedSimplex(universe=self.universe, xs=[(0, 2)], ys=[(1, 1), (2, 1)])

        self.assertEqual(simplex.s, 1)
        self.assertEqual(simplex.t, 2)
        self.assertEqual(simplex.xs[0], Vertex(point=0, weight=2))
        self.assertEqual(simplex.points(), [0, 1, 2])

    def test_totals_must_match(self):
        with self.assertRaises(InvalidSimplex):
            SignedSimplex(universe=self.universe, xs=[(0, 2)], ys=[(1, 1)])

    def test_halves_must_not_be_empty(self):
        with self.assertRaises(InvalidSimplex):
            SignedSimplex(universe=self.universe, xs=[], ys=[(1, 1)])

    def test_points_must_be_in_universe(self):
        with self.assertRaises(InvalidSimplex):
            SignedSimplex(universe=self.universe, xs=[(3, 1)], ys=[(1, 1)])

    def test_swapped(self):
        simplex = SignedSimplex(universe=self.universe, xs=[(0, 2)], ys=[(1, 1), (2, 1)])
        swapped = simplex.swapped()

        self.assertEqual(swapped.xs, simplex.ys)
        self.assertEqual(swapped.ys, simplex.xs)


class LpPointSetTest(TestCase):

    def test_distances(self):
        self.assertEqual(LpPointSet(p=1, coords=[[0, 0], [1, 1]]).dist[0, 1], 2)
        self.assertAlmostEqual(LpPointSet(p=2, coords=[[0, 0], [3, 4]]).dist[0, 1], 5)
        self.assertAlmostEqual(LpPointSet(p=0.5, coords=[[0], [4]]).dist[0, 1], 2)

    def test_points_must_be_distinct(self):
        with self.assertRaises(InvalidPointSet):
            LpPointSet(p=1, coords=[[0, 0], [1, 1], [0, 1e-12]])

    def test_exponent_must_be_positive(self):
        with self.assertRaises(InvalidPointSet):
            LpPointSet(p=0, coords=[[0, 0], [1, 1]])

    def test_coordinates_must_be_finite(self):
        with self.assertRaises(InvalidPointSet):
            LpPointSet(p=1, coords=[[0, float("nan")], [1, 1]])
