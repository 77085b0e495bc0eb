# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

import numpy


def _clean(item):
    return {key if key[0] != "_" else "[%s]" % key[1:]: value
            for key, value in item.__dict__.items()
            if key != "_frozen"}


def _same(a, b):
    if isinstance(a, numpy.ndarray) or isinstance(b, numpy.ndarray):
        return numpy.array_equal(numpy.asarray(a), numpy.asarray(b))
    if isinstance(a, (list, tuple)) and isinstance(b, (list, tuple)):
        return len(a) == len(b) and all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, dict) and isinstance(b, dict):
        return a.keys() == b.keys() and all(_same(a[k], b[k]) for k in a)
    return a == b


class Model:
    """Value object. Fields are declared in init() and are read-only afterwards."""

    def __init__(self, **kwargs):
        self.init(**kwargs)
        self._frozen = True

    def __eq__(self, other):
        if type(self) is not type(other):
            return False
        mine, theirs = _clean(self), _clean(other)
        return mine.keys() == theirs.keys() and all(_same(mine[k], theirs[k]) for k in mine)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return str(self)

    def __str__(self):
        return "{name}({content})".format(name=self.__class__.__name__,
                                          content=str(_clean(self))[1:-1])

    def __setattr__(self, attr, value):
        # Not fully initialized yet, let anything happen
        if not hasattr(self, '_frozen'):
            super().__setattr__(attr, value)
            return

        raise AttributeError("%s is read-only on %s" % (attr, self.__class__.__name__))

