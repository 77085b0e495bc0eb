# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

import json
from unittest import TestCase

import numpy

from polygonal.common.models import FiniteMetricSpace, LpPointSet, SignedSimplex, Refinement, Certificate, VDKernel, \
    AnalysisReport
from polygonal.common.schemas import MetricSchema, PointSetSchema, SimplexSchema, FamiliesSchema, \
    RefinementSchema, CertificateSchema, VDKernelSchema, AnalysisReportSchema
from polygonal.common.serialize import serialize


class SerializeTest(TestCase):

    def test_read_and_write_metric(self):
        space = FiniteMetricSpace(labels=["a", "b", "c"], dist=[[0, 1, 2], [1, 0, 1], [2, 1, 0]])

        schema = MetricSchema()
        as_string, _ = serialize(schema, space)

        self.assertEqual(list(json.loads(as_string).keys()), ["labels", "dist"])

        found_back, errors = schema.loads(as_string)

        self.assertEqual(errors, {})
        self.assertIsNot(space, found_back)
        self.assertEqual(space, found_back)

    def test_read_and_write_points(self):
        points = LpPointSet(p=1.5, coords=[[0, 0], [1, 2]])

        schema = PointSetSchema()
        as_string, _ = serialize(schema, points)

        self.assertEqual(json.loads(as_string), {"p": 1.5, "points": [[0.0, 0.0], [1.0, 2.0]]})
        self.assertEqual(schema.loads(as_string).data, points)

    def test_none_members_are_dropped(self):
        as_string, _ = serialize(CertificateSchema(), Certificate(p=0, holds=True, lambda_max=None, eps_eig=1e-8))

        self.assertNotIn("lambda_max", as_string)

        as_string, _ = serialize(RefinementSchema(), Refinement(degenerate=True))
        self.assertEqual(json.loads(as_string), {"degenerate": True})

    def test_empty_lists_are_kept(self):
        as_string, _ = serialize(VDKernelSchema(), VDKernel(basis=[], constraint_count=4))

        self.assertEqual(json.loads(as_string), {"dimension": 0, "constraint_count": 4, "basis": []})

    def test_raw_results_may_hold_numpy_values(self):
        report = AnalysisReport(command="vd-solve", inputs={}, tolerances={}, version="0",
                                results={"strict": numpy.bool_(True), "dimension": numpy.int64(0),
                                         "alpha": numpy.array([1.0, -1.0]), "note": None})

        as_string, _ = serialize(AnalysisReportSchema(), report)

        self.assertEqual(json.loads(as_string)["results"], {"strict": True, "dimension": 0, "alpha": [1.0, -1.0]})

    def test_unknown_fields_are_rejected(self):
        _, errors = MetricSchema().load({"labels": ["a"], "dist": [[0]], "extra": 1})

        self.assertIn("_schema", errors)

    def test_labels_must_match_rows(self):
        _, errors = MetricSchema().load({"labels": ["a"], "dist": [[0, 1], [1, 0]]})

        self.assertIn("_schema", errors)

    def test_ragged_points_are_rejected(self):
        _, errors = PointSetSchema().load({"p": 1, "points": [[0, 0], [1]]})

        self.assertIn("_schema", errors)

    def test_families_must_have_same_shape(self):
        _, errors = FamiliesSchema().load({"p": 1, "xs": [[0, 0], [1, 1]], "ys": [[0, 0]]})

        self.assertIn("_schema", errors)

    def test_simplex_uses_context_universe(self):
        points = LpPointSet(p=1, coords=[[0, 0], [1, 1], [1, 0], [0, 1]])
        simplex = SignedSimplex(universe=points, xs=[(0, 1), (1, 1)], ys=[(2, 1), (3, 1)])

        as_string, _ = serialize(SimplexSchema(context={"universe_ref": "points.json"}), simplex)
        data = json.loads(as_string)

        self.assertEqual(data["universe"], "points.json")
        self.assertEqual(data["x"], [{"id": 0, "w": 1.0}, {"id": 1, "w": 1.0}])

        found_back, errors = SimplexSchema(context={"universe": points}).loads(as_string)
        self.assertEqual(errors, {})
        self.assertEqual(found_back, simplex)

    def test_simplex_inlines_universe_without_reference(self):
        points = LpPointSet(p=2, coords=[[0, 0], [1, 1]])
        simplex = SignedSimplex(universe=points, xs=[(0, 1)], ys=[(1, 1)])

        as_string, _ = serialize(SimplexSchema(), simplex)

        self.assertEqual(json.loads(as_string)["universe"], {"p": 2.0, "points": [[0.0, 0.0], [1.0, 1.0]]})
