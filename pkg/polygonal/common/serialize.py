# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

import json

import numpy


def serialize(schema, data, *, indent=4):
    data, errors = schema.dump(data)
    return json.dumps(clean_walk(data), indent=indent, default=_plain), errors


def clean_walk(data):
    """Copy of a dumped structure without None members. Empty lists are results and are kept."""
    if isinstance(data, list):
        return [clean_walk(item) for item in data]
    if isinstance(data, dict):
        return data.__class__((key, clean_walk(val)) for key, val in data.items() if val is not None)
    return data


def _plain(value):
    # Raw result payloads may still hold numpy scalars or arrays
    if isinstance(value, numpy.ndarray):
        return value.tolist()
    if isinstance(value, numpy.generic):
        return value.item()
    raise TypeError("%s is not JSON serializable" % value.__class__.__name__)
