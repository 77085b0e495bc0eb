# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

import json
from unittest import TestCase
from unittest.mock import mock_open, patch

from fixtures import file_path

from polygonal.common import Storage, FiniteMetricSpace, LpPointSet, SignedSimplex
from polygonal.common.errors import InvalidFile, InvalidPointSet


METRIC_FILE_DATA = """
{
    "labels": ["a", "b", "c", "d"],
    "dist": [[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]]
}""".strip()

POINTS_FILE_DATA = """
{
    "p": 1.0,
    "points": [[0, 0], [1, 1], [1, 0], [0, 1]]
}""".strip()

SIMPLEX_FILE_DATA = """
{
    "universe": "points.json",
    "x": [{"id": 0, "w": 1}, {"id": 1, "w": 1}],
    "y": [{"id": 2, "w": 1}, {"id": 3, "w": 1}]
}""".strip()


def files(mapping):
    """mock_open serving a different content per path."""
    m = mock_open()

    def opener(path, mode):
        return mock_open(read_data=mapping[path])()

    m.side_effect = opener
    return m


class StorageTest(TestCase):

    def test_store_metric(self):
        m = mock_open()
        with \
                patch('polygonal.common.storage.open', m, create=True), \
                patch('polygonal.common.storage.makedirs') as makedirs:

            storage = Storage('/some/path')
            storage.write_metric(FiniteMetricSpace(labels=["a", "b"], dist=[[0, 1], [1, 0]]), 'spaces/pair.json')

            makedirs.assert_called_once_with('/some/path/spaces', mode=0o755, exist_ok=True)
            m.assert_called_once_with('/some/path/spaces/pair.json', 'w')
            handle = m()
            expected = json.dumps({"labels": ["a", "b"], "dist": [[0.0, 1.0], [1.0, 0.0]]}, indent=4)
            handle.write.assert_called_once_with(expected + "\n")

    def test_directories_are_created_once(self):
        m = mock_open()
        with \
                patch('polygonal.common.storage.open', m, create=True), \
                patch('polygonal.common.storage.makedirs') as makedirs:

            storage = Storage('/some/path')
            storage.write_points(LpPointSet(p=1, coords=[[0], [1]]), 'out/a.json')
            storage.write_points(LpPointSet(p=1, coords=[[0], [2]]), 'out/b.json')

            makedirs.assert_called_once_with('/some/path/out', mode=0o755, exist_ok=True)

    def test_read_metric_but_not_found(self):
        m = mock_open()
        with patch('polygonal.common.storage.open', m, create=True):
            m.side_effect = FileNotFoundError()

            storage = Storage('/some/path')

            with self.assertRaises(FileNotFoundError):
                storage.read_metric("c4.json")

            m.assert_called_with('/some/path/c4.json', 'r')

    def test_read_metric_is_found(self):
        m = mock_open(read_data=METRIC_FILE_DATA)
        with patch('polygonal.common.storage.open', m, create=True):
            storage = Storage('/some/path')

            space = storage.read_metric("c4.json")
            self.assertIsInstance(space, FiniteMetricSpace)
            self.assertEqual(space.labels, ["a", "b", "c", "d"])
            self.assertEqual(space.dist[0, 2], 2)

    def test_read_invalid_json(self):
        m = mock_open(read_data="{not json")
        with patch('polygonal.common.storage.open', m, create=True):
            storage = Storage('/some/path')

            with self.assertRaises(InvalidFile):
                storage.read_metric("broken.json")

    def test_read_schema_errors(self):
        m = mock_open(read_data='{"labels": ["a"]}')
        with patch('polygonal.common.storage.open', m, create=True):
            storage = Storage('/some/path')

            with self.assertRaises(InvalidFile) as context:
                storage.read_metric("partial.json")

            self.assertIn("dist", context.exception.errors)

    def test_read_points_with_duplicates(self):
        m = mock_open(read_data='{"p": 1, "points": [[0, 0], [0, 0]]}')
        with patch('polygonal.common.storage.open', m, create=True):
            storage = Storage('/some/path')

            with self.assertRaises(InvalidPointSet):
                storage.read_points("points.json")

    def test_read_simplex_resolves_universe_next_to_file(self):
        m = files({'/some/path/fixtures/simplex.json': SIMPLEX_FILE_DATA,
                   '/some/path/fixtures/points.json': POINTS_FILE_DATA})
        with patch('polygonal.common.storage.open', m, create=True):
            storage = Storage('/some/path')

            simplex = storage.read_simplex("fixtures/simplex.json")

            self.assertIsInstance(simplex, SignedSimplex)
            self.assertIsInstance(simplex.universe, LpPointSet)
            self.assertEqual(simplex.universe.size, 4)
            self.assertEqual([v.point for v in simplex.ys], [2, 3])

    def test_read_simplex_with_inline_universe(self):
        inline = json.dumps({"universe": json.loads(METRIC_FILE_DATA),
                             "x": [{"id": 0, "w": 2}],
                             "y": [{"id": 1, "w": 1}, {"id": 3, "w": 1}]})
        m = mock_open(read_data=inline)
        with patch('polygonal.common.storage.open', m, create=True):
            simplex = Storage('/some/path').read_simplex("simplex.json")

            self.assertIsInstance(simplex.universe, FiniteMetricSpace)
            self.assertEqual(simplex.x_weights().tolist(), [2.0])

    def test_read_simplex_without_universe(self):
        m = mock_open(read_data='{"x": [], "y": []}')
        with patch('polygonal.common.storage.open', m, create=True):
            with self.assertRaises(InvalidFile):
                Storage('/some/path').read_simplex("simplex.json")

    def test_read_space_from_sample(self):
        storage = Storage('/')
        space = storage.read_space(file_path(__file__, "samples/triangle.json"))

        self.assertIsInstance(space, FiniteMetricSpace)
        self.assertEqual(space.size, 3)
