# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.


class InputError(Exception):
    pass


class MalformedMatrix(InputError):
    pass


class InvalidMetric(InputError):

    def __init__(self, violations):
        super().__init__("%d metric axiom violation(s)" % len(violations))
        self.violations = violations


class InvalidSimplex(InputError):
    pass


class InvalidPointSet(InputError):
    pass


class ParameterOutOfRange(InputError):
    pass


class ExponentMismatch(InputError):
    pass


class DegenerateSimplex(InputError):
    pass


class NotCompletelyRefined(InputError):
    pass


class HypothesisFailed(InputError):

    def __init__(self, hypothesis, message=None):
        super().__init__(message or hypothesis)
        self.hypothesis = hypothesis


class NegativeTypeFails(InputError):
    pass


class PreconditionFailed(InputError):
    pass


class NumericFailure(Exception):
    pass


class InvalidFile(InputError):

    def __init__(self, path, errors):
        super().__init__("%s: %s" % (path, errors))
        self.path = path
        self.errors = errors
