# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

import json
from json.decoder import JSONDecodeError
from os.path import join, dirname
from os import makedirs
from contextlib import contextmanager

from .schemas import MetricSchema, PointSetSchema, SimplexSchema, FamiliesSchema
from .serialize import serialize
from .config import DEFAULT_PATH
from .errors import InvalidFile
from .logs import logger


class Storage:

    def __init__(self, base_path=DEFAULT_PATH):
        self.base_path = base_path
        self.known = set()

    def read_metric(self, path):
        return self._read(MetricSchema(), path)

    def write_metric(self, space, path):
        self._write(MetricSchema(), space, path)

    def read_points(self, path):
        return self._read(PointSetSchema(), path)

    def write_points(self, points, path):
        self._write(PointSetSchema(), points, path)

    def read_space(self, path):
        """A metric or a point set, whichever the file holds."""
        return self._resolve_universe(self._read_json(path), dirname(path))

    def read_families(self, path):
        return self._read(FamiliesSchema(), path)

    def read_simplex(self, path):
        raw = self._read_json(path)
        if not isinstance(raw, dict) or "universe" not in raw:
            raise InvalidFile(path, {"universe": ["Missing data for required field."]})

        universe = self._resolve_universe(raw["universe"], dirname(path))
        return self._load(SimplexSchema(context={"universe": universe}), raw, path)

    def write_simplex(self, simplex, path, *, universe_ref=None):
        context = {} if universe_ref is None else {"universe_ref": universe_ref}
        self._write(SimplexSchema(context=context), simplex, path)

    def write_text(self, path, content):
        self._prepare_path(dirname(path))
        with self._open('w', path) as fp:
            fp.write(content)

    def _resolve_universe(self, ref, relative_to):
        if isinstance(ref, str):
            return self._resolve_universe(self._read_json(join(relative_to, ref)), relative_to)
        if isinstance(ref, dict) and "dist" in ref:
            return self._load(MetricSchema(), ref, "universe")
        if isinstance(ref, dict) and "points" in ref:
            return self._load(PointSetSchema(), ref, "universe")
        raise InvalidFile("universe", {"universe": ["Expected a metric, a point set or a path to one."]})

    def _write(self, schema, item, path):
        data, errors = serialize(schema, item)
        self.write_text(path, data + "\n")

    def _read(self, schema, path):
        return self._load(schema, self._read_json(path), path)

    def _load(self, schema, raw, path):
        data, errors = schema.load(raw)
        if errors:
            raise InvalidFile(path, errors)
        return data

    def _read_json(self, path):
        try:
            with self._open('r', path) as fp:
                return json.loads(fp.read())
        except JSONDecodeError as e:
            logger.critical("JSON Decode error in %s", path)
            raise InvalidFile(path, {"_schema": [str(e)]})

    @contextmanager
    def _open(self, mode, *args):
        with open(self._path(*args), mode) as fp:
            yield fp

    def _prepare_path(self, relative):
        if relative not in self.known:
            makedirs(self._path(relative), mode=0o755, exist_ok=True)
            self.known.add(relative)

    def _path(self, *args):
        return join(self.base_path, *args)
