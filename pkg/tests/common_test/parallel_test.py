# polygonal-tools: Negative type and polygonal equality analysis for finite metric spaces
# Copyright (C) 2026-  polygonal-tools contributors
#
# This program is free software; you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation; version 2 of the License.

from unittest import TestCase

from polygonal.common.parallel import BackgroundRunner


class ParallelTest(TestCase):

    def square(self, a):
        return a * a

    def test_default_runner(self):
        self.assertEqual(BackgroundRunner.default_map(self.square, [2, 3, 4]), [4, 9, 16])
        self.assertEqual(BackgroundRunner.default_map(self.square, iter([5])), [25])
        self.assertEqual(BackgroundRunner.default_map(self.square, []), [])

    def test_no_size_uses_default(self):
        runner = BackgroundRunner(None)
        self.assertIs(runner.map, BackgroundRunner.default_map)
        self.assertIsNone(runner.executor)
        runner.close()

    def test_map_preserves_order(self):
        runner = BackgroundRunner(size=3)
        try:
            self.assertEqual(runner.map(self.square, range(20)), [x * x for x in range(20)])
            self.assertEqual(runner.map(self.square, (x for x in [3, 1, 2])), [9, 1, 4])
        finally:
            runner.close()

    def test_exceptions_propagate(self):
        def fail(item):
            if item == 2:
                raise ValueError("boom")
            return item

        runner = BackgroundRunner(size=2)
        try:
            with self.assertRaises(ValueError):
                runner.map(fail, range(4))
        finally:
            runner.close()
