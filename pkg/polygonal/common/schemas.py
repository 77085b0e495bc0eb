# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

from collections import OrderedDict

from marshmallow import Schema, fields, post_load, validates_schema, ValidationError

from .models import FiniteMetricSpace, LpPointSet, Vertex, SignedSimplex, VectorFamilies


class StrictSchema(Schema):

    @validates_schema(pass_original=True)
    def reject_unknown_fields(self, data, original_data):
        if not isinstance(original_data, dict):
            return
        unknown = sorted(set(original_data) - set(self.fields))
        if unknown:
            raise ValidationError("Unknown field(s): %s." % ", ".join(unknown))


def _check_matrix(rows, name):
    if not rows:
        raise ValidationError("%s must not be empty." % name)
    if len({len(row) for row in rows}) != 1:
        raise ValidationError("%s rows must all have the same length." % name)


class MetricSchema(StrictSchema):
    class Meta:
        ordered = True

    labels = fields.List(fields.String(), required=True)
    dist = fields.List(fields.List(fields.Float()), required=True)

    @validates_schema
    def check_shape(self, data):
        if "labels" not in data or "dist" not in data:
            return
        _check_matrix(data["dist"], "dist")
        if len(data["labels"]) != len(data["dist"]):
            raise ValidationError("There must be one label per distance row.")
        if len(set(data["labels"])) != len(data["labels"]):
            raise ValidationError("Labels must be unique.")

    @post_load
    def make(self, data):
        return FiniteMetricSpace(**data)


class PointSetSchema(StrictSchema):
    class Meta:
        ordered = True

    p = fields.Float(required=True)
    points = fields.List(fields.List(fields.Float()), required=True, attribute="coords")

    @validates_schema
    def check_shape(self, data):
        if "coords" in data:
            _check_matrix(data["coords"], "points")

    @post_load
    def make(self, data):
        return LpPointSet(**data)


class VertexSchema(StrictSchema):
    class Meta:
        ordered = True

    id = fields.Integer(required=True, attribute="point")
    w = fields.Float(required=True, attribute="weight")

    @post_load
    def make(self, data):
        return Vertex(**data)


class SimplexSchema(StrictSchema):
    """Simplex file. The universe is resolved by the caller and handed over in the context."""

    class Meta:
        ordered = True

    universe = fields.Method("dump_universe", deserialize="load_universe", required=True)
    x = fields.Nested(VertexSchema, many=True, required=True, attribute="xs")
    y = fields.Nested(VertexSchema, many=True, required=True, attribute="ys")

    def dump_universe(self, simplex):
        if "universe_ref" in self.context:
            return self.context["universe_ref"]
        if isinstance(simplex.universe, LpPointSet):
            return PointSetSchema().dump(simplex.universe).data
        return MetricSchema().dump(simplex.universe).data

    def load_universe(self, value):
        return value

    @post_load
    def make(self, data):
        if "universe" not in self.context:
            raise ValidationError("The simplex universe was not resolved.", "universe")
        return SignedSimplex(universe=self.context["universe"], xs=data["xs"], ys=data["ys"])


class FamiliesSchema(StrictSchema):
    class Meta:
        ordered = True

    p = fields.Float(required=True)
    xs = fields.List(fields.List(fields.Float()), required=True)
    ys = fields.List(fields.List(fields.Float()), required=True)

    @validates_schema
    def check_shape(self, data):
        if "xs" not in data or "ys" not in data:
            return
        _check_matrix(data["xs"], "xs")
        _check_matrix(data["ys"], "ys")
        if len(data["xs"]) != len(data["ys"]):
            raise ValidationError("Both families must have the same size.")
        if len(data["xs"][0]) != len(data["ys"][0]):
            raise ValidationError("Both families must have the same number of coordinates.")

    @post_load
    def make(self, data):
        return VectorFamilies(**data)


# Report schemas, dump only


class ViolationSchema(Schema):
    class Meta:
        ordered = True

    axiom = fields.String()
    indices = fields.List(fields.Integer())


class CertificateSchema(Schema):
    class Meta:
        ordered = True

    p = fields.Float()
    holds = fields.Boolean()
    lambda_max = fields.Float(allow_none=True)
    eps_eig = fields.Float()


class RoundnessReportSchema(Schema):
    class Meta:
        ordered = True

    roundness = fields.Float()
    at_cap = fields.Boolean()
    iterations = fields.Integer()
    p_max = fields.Float()
    tol_p = fields.Float()
    witnesses = fields.Nested("EqualityWitnessSchema", many=True)
    certificates = fields.Method("dump_certificates")

    def dump_certificates(self, report):
        schema = CertificateSchema()
        high = report.certificate_high
        return OrderedDict([("low", schema.dump(report.certificate_low).data),
                            ("high", None if high is None else schema.dump(high).data)])


class EqualityWitnessSchema(Schema):
    class Meta:
        ordered = True

    p = fields.Float()
    alpha = fields.List(fields.Float())
    residual = fields.Float()
    tolerance = fields.Float()


class ObstructionReportSchema(Schema):
    class Meta:
        ordered = True

    verdict = fields.Boolean()
    p = fields.Float()
    q = fields.Float()
    source_strict_q = fields.Nested(CertificateSchema)
    source_strict_p = fields.Nested(CertificateSchema)
    witness = fields.Nested(EqualityWitnessSchema)
    reasons = fields.List(fields.String())


class SchoenbergReportSchema(Schema):
    class Meta:
        ordered = True

    embeddable = fields.Boolean()
    min_eigenvalue = fields.Float()
    tolerance = fields.Float()
    coordinates = fields.List(fields.List(fields.Float()), allow_none=True)


class GapValueSchema(Schema):
    class Meta:
        ordered = True

    p = fields.Float()
    value = fields.Float()


class RefinementSchema(Schema):
    class Meta:
        ordered = True

    degenerate = fields.Boolean()
    simplex = fields.Nested(SimplexSchema, exclude=("universe",), allow_none=True)


class ClusterSchema(Schema):
    class Meta:
        ordered = True

    value = fields.Float()
    m = fields.Float()
    n = fields.Float()


class CoordinateReportSchema(Schema):
    class Meta:
        ordered = True

    omega = fields.Integer()
    clusters = fields.Nested(ClusterSchema, many=True)
    degenerate = fields.Boolean()
    balanced = fields.Boolean()


class VDReportSchema(Schema):
    class Meta:
        ordered = True

    virtually_degenerate = fields.Boolean()
    coordinates = fields.Nested(CoordinateReportSchema, many=True)


class VDKernelSchema(Schema):
    class Meta:
        ordered = True

    dimension = fields.Integer()
    constraint_count = fields.Integer()
    basis = fields.List(fields.List(fields.Float()))


class ElsnerReportSchema(Schema):
    class Meta:
        ordered = True

    p = fields.Float()
    equality_holds = fields.Boolean()
    per_coordinate_identical = fields.Boolean()
    residual = fields.Float()
    agreement_expected = fields.Boolean()


class PairReportSchema(Schema):
    class Meta:
        ordered = True

    first = fields.Integer()
    second = fields.Integer()
    shared_support = fields.List(fields.Integer())
    disjoint = fields.Boolean()
    kappa = fields.Float(allow_none=True)
    lemma_hypotheses = fields.Boolean()


class PropertyEReportSchema(Schema):
    class Meta:
        ordered = True

    property_e = fields.Boolean()
    lemma_pairs = fields.Boolean()
    pairs = fields.Nested(PairReportSchema, many=True)


class AffineReportSchema(Schema):
    class Meta:
        ordered = True

    rank = fields.Integer()
    dependent = fields.Boolean()
    dependency = fields.List(fields.Float(), allow_none=True)


class Gamma2IdentitySchema(Schema):
    class Meta:
        ordered = True

    lhs = fields.Float()
    gap = fields.Float()
    holds = fields.Boolean()


class PolygonalClassificationSchema(Schema):
    class Meta:
        ordered = True

    gap_zero = fields.Boolean()
    balanced = fields.Boolean()
    gap = fields.Float()
    defect_norm = fields.Float()


class AnalysisReportSchema(Schema):
    class Meta:
        ordered = True

    command = fields.String()
    version = fields.String()
    inputs = fields.Dict()
    tolerances = fields.Dict()
    results = fields.Raw()


class ErrorReportSchema(Schema):
    class Meta:
        ordered = True

    command = fields.String()
    version = fields.String()
    error = fields.String()
    message = fields.String()
    violations = fields.Nested(ViolationSchema, many=True, allow_none=True)
    details = fields.Raw(allow_none=True)
