# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

from collections import OrderedDict

import numpy

from .basemodel import Model
from .config import EPS_WEIGHT, EPS_COORD
from .errors import InvalidSimplex, InvalidPointSet


def frozen_array(values, dtype=float):
    array = numpy.array(values, dtype=dtype)
    array.setflags(write=False)
    return array


def _powers(dist, p):
    # d^0 is 1 between distinct points and 0 on the diagonal
    out = numpy.zeros_like(dist)
    off = ~numpy.eye(len(dist), dtype=bool)
    out[off] = dist[off] ** p
    return out


class FiniteMetricSpace(Model):

    def init(self, *, labels, dist):
        self.labels = list(labels)
        self.dist = frozen_array(dist)

    @property
    def size(self):
        return len(self.labels)

    def distance_powers(self, p):
        return _powers(self.dist, p)


class Violation(Model):

    def init(self, *, axiom, indices):
        self.axiom = axiom
        self.indices = [int(k) for k in indices]


class LpPointSet(Model):
    """Finitely many points of l_p over M coordinates (counting measure).

    For p >= 1 the metric is the l_p norm distance. For 0 < p < 1 the metric is sum |x(w) - y(w)|^p,
    the usual metric on L_p below 1.
    """

    def init(self, *, p, coords):
        self.p = float(p)
        self.coords = frozen_array(numpy.atleast_2d(coords))

        if not self.p > 0 or not numpy.isfinite(self.p):
            raise InvalidPointSet("exponent must be a positive real, got %r" % p)
        if self.coords.ndim != 2 or self.coords.size == 0:
            raise InvalidPointSet("coordinates must form a non-empty N x M matrix")
        if not numpy.all(numpy.isfinite(self.coords)):
            raise InvalidPointSet("coordinates must be finite")

        gaps = numpy.abs(self.coords[:, None, :] - self.coords[None, :, :]).max(axis=2)
        gaps[numpy.diag_indices(self.size)] = numpy.inf
        if numpy.any(gaps <= EPS_COORD):
            j, i = numpy.argwhere(gaps <= EPS_COORD)[0]
            raise InvalidPointSet("points %d and %d coincide" % (j, i))

    @property
    def size(self):
        return self.coords.shape[0]

    @property
    def dims(self):
        return self.coords.shape[1]

    @property
    def labels(self):
        return ["z%d" % k for k in range(self.size)]

    def norm_powers(self, exponent=None):
        """Matrix of ||z_j - z_i||_q^q, with q the point set exponent unless given."""
        q = self.p if exponent is None else exponent
        diff = numpy.abs(self.coords[:, None, :] - self.coords[None, :, :])
        return (diff ** q).sum(axis=2) if q > 0 else (diff > 0).sum(axis=2).astype(float)

    @property
    def dist(self):
        if self.p >= 1:
            return self.norm_powers() ** (1.0 / self.p)
        return self.norm_powers()

    def distance_powers(self, p):
        return _powers(self.dist, p)


class Vertex(Model):

    def init(self, *, point, weight):
        self.point = int(point)
        self.weight = float(weight)


class SignedSimplex(Model):
    """Two weighted vertex lists over a point universe whose side totals agree."""

    def init(self, *, universe, xs, ys):
        self.universe = universe
        self.xs = [v if isinstance(v, Vertex) else Vertex(point=v[0], weight=v[1]) for v in xs]
        self.ys = [v if isinstance(v, Vertex) else Vertex(point=v[0], weight=v[1]) for v in ys]

        if not self.xs or not self.ys:
            raise InvalidSimplex("both halves of a simplex need at least one vertex")

        for v in self.xs + self.ys:
            if not 0 <= v.point < universe.size:
                raise InvalidSimplex("point %d is not in the universe" % v.point)

        total_x = sum(v.weight for v in self.xs)
        total_y = sum(v.weight for v in self.ys)
        scale = max(1.0, sum(abs(v.weight) for v in self.xs + self.ys))
        if abs(total_x - total_y) > EPS_WEIGHT * scale:
            raise InvalidSimplex("total weights differ: %r != %r" % (total_x, total_y))

    @property
    def s(self):
        return len(self.xs)

    @property
    def t(self):
        return len(self.ys)

    def x_points(self):
        return numpy.array([v.point for v in self.xs], dtype=int)

    def y_points(self):
        return numpy.array([v.point for v in self.ys], dtype=int)

    def x_weights(self):
        return numpy.array([v.weight for v in self.xs])

    def y_weights(self):
        return numpy.array([v.weight for v in self.ys])

    def points(self):
        """S(D): the distinct point ids in the simplex, sorted."""
        return sorted({v.point for v in self.xs} | {v.point for v in self.ys})

    def swapped(self):
        return SignedSimplex(universe=self.universe, xs=self.ys, ys=self.xs)


class RepeatingNumbers(Model):

    def init(self, *, numbers):
        self.numbers = OrderedDict(sorted(numbers.items()))

    def m(self, point):
        return self.numbers.get(point, (0.0, 0.0))[0]

    def n(self, point):
        return self.numbers.get(point, (0.0, 0.0))[1]

    def points(self):
        return list(self.numbers.keys())


class GapValue(Model):

    def init(self, *, p, value):
        self.p = float(p)
        self.value = float(value)


class Refinement(Model):

    def init(self, *, degenerate, simplex=None):
        self.degenerate = degenerate
        self.simplex = simplex


class NegTypeForm(Model):

    def init(self, *, p, matrix, basis, projected):
        self.p = float(p)
        self.matrix = frozen_array(matrix)
        self.basis = frozen_array(basis)
        self.projected = frozen_array(projected)


class Certificate(Model):

    def init(self, *, p, holds, lambda_max, eps_eig):
        self.p = float(p)
        self.holds = bool(holds)
        self.lambda_max = None if lambda_max is None else float(lambda_max)
        self.eps_eig = float(eps_eig)


class RoundnessReport(Model):

    def init(self, *, roundness, at_cap, iterations, p_max, tol_p, certificate_low, certificate_high=None,
             witnesses=()):
        self.roundness = float(roundness)
        self.at_cap = bool(at_cap)
        self.iterations = int(iterations)
        self.p_max = float(p_max)
        self.tol_p = float(tol_p)
        self.certificate_low = certificate_low
        self.certificate_high = certificate_high
        self.witnesses = list(witnesses)


class EqualityWitness(Model):

    def init(self, *, alpha, p, residual, tolerance):
        self.alpha = frozen_array(alpha)
        self.p = float(p)
        self.residual = float(residual)
        self.tolerance = float(tolerance)


class ObstructionReport(Model):

    def init(self, *, verdict, p, q, source_strict_q, source_strict_p, witness, reasons):
        self.verdict = verdict
        self.p = float(p)
        self.q = float(q)
        self.source_strict_q = source_strict_q
        self.source_strict_p = source_strict_p
        self.witness = witness
        self.reasons = list(reasons)


class SchoenbergReport(Model):

    def init(self, *, embeddable, min_eigenvalue, tolerance, coordinates=None):
        self.embeddable = bool(embeddable)
        self.min_eigenvalue = float(min_eigenvalue)
        self.tolerance = float(tolerance)
        self.coordinates = None if coordinates is None else frozen_array(coordinates)


class VDKernel(Model):

    def init(self, *, basis, constraint_count):
        self.basis = [frozen_array(alpha) for alpha in basis]
        self.constraint_count = int(constraint_count)

    @property
    def dimension(self):
        return len(self.basis)


class Cluster(Model):

    def init(self, *, value, m, n):
        self.value = float(value)
        self.m = float(m)
        self.n = float(n)


class CoordinateReport(Model):

    def init(self, *, omega, clusters, degenerate, balanced):
        self.omega = int(omega)
        self.clusters = list(clusters)
        self.degenerate = bool(degenerate)
        self.balanced = bool(balanced)


class VDReport(Model):

    def init(self, *, virtually_degenerate, coordinates):
        self.virtually_degenerate = bool(virtually_degenerate)
        self.coordinates = list(coordinates)


class ElsnerReport(Model):

    def init(self, *, p, equality_holds, per_coordinate_identical, residual, agreement_expected):
        self.p = float(p)
        self.equality_holds = bool(equality_holds)
        self.per_coordinate_identical = bool(per_coordinate_identical)
        self.residual = float(residual)
        self.agreement_expected = bool(agreement_expected)


class PairReport(Model):

    def init(self, *, first, second, shared_support, disjoint, kappa=None, lemma_hypotheses=False):
        self.first = int(first)
        self.second = int(second)
        self.shared_support = [int(l) for l in shared_support]
        self.disjoint = bool(disjoint)
        self.kappa = None if kappa is None else float(kappa)
        self.lemma_hypotheses = bool(lemma_hypotheses)


class PropertyEReport(Model):

    def init(self, *, pairs, property_e, lemma_pairs):
        self.pairs = list(pairs)
        self.property_e = bool(property_e)
        self.lemma_pairs = bool(lemma_pairs)


class InfVDSReport(Model):

    def init(self, *, points, truncation, variant, pairs):
        self.points = points
        self.truncation = int(truncation)
        self.variant = variant
        self.pairs = list(pairs)


class AffineReport(Model):

    def init(self, *, rank, dependent, dependency=None):
        self.rank = int(rank)
        self.dependent = bool(dependent)
        self.dependency = None if dependency is None else frozen_array(dependency)


class Gamma2Identity(Model):

    def init(self, *, lhs, gap, holds):
        self.lhs = float(lhs)
        self.gap = float(gap)
        self.holds = bool(holds)


class PolygonalClassification(Model):

    def init(self, *, gap_zero, balanced, gap, defect_norm):
        self.gap_zero = bool(gap_zero)
        self.balanced = bool(balanced)
        self.gap = float(gap)
        self.defect_norm = float(defect_norm)


class AnalysisReport(Model):

    def init(self, *, command, inputs, results, tolerances, version):
        self.command = command
        self.inputs = dict(inputs)
        self.results = results
        self.tolerances = dict(tolerances)
        self.version = version


class VectorFamilies(Model):

    def init(self, *, p, xs, ys):
        self.p = float(p)
        self.xs = frozen_array(xs)
        self.ys = frozen_array(ys)


class ErrorReport(Model):

    def init(self, *, command, error, message, version, violations=None, details=None):
        self.command = command
        self.error = error
        self.message = message
        self.version = version
        self.violations = violations
        self.details = details
