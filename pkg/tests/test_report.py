import math
import os
import unittest
from unittest import mock

from psinfo.core import GridSpec1D
from psinfo.core import GridSpec2D
from psinfo.exceptions import InvariantViolation
from psinfo.oscillator import OscillatorSpec
from psinfo.report import Tolerances
from psinfo.report import compute_all
from psinfo.report import expected_measures
from psinfo.report import sweep
from psinfo.report import worker_count
from psinfo.report.report import _check_complete

SMALL_GRID = GridSpec2D.square(GridSpec1D.symmetric(8.0, 257))


class TestComputeAll(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.ground = compute_all(OscillatorSpec(0, 0.0))
        cls.ground_again = compute_all(OscillatorSpec(0, 0.0))
        cls.perturbed = compute_all(OscillatorSpec(0, 0.1))
        cls.excited = compute_all(OscillatorSpec(1, 0.1))

    def test_registry_is_complete(self):
        names = [entry.name for entry in self.ground.entries]
        self.assertEqual(sorted(names), sorted(expected_measures()))
        self.assertGreaterEqual(len(names), 30)

    def test_gaussian_saturation(self):
        report = self.ground
        self.assertTrue(all(check.satisfied for check in report.bounds))
        self.assertAlmostEqual(report.value("S_x_W").real, (1 + math.log(math.pi)) / 2, delta=1e-5)
        margin = report.bound("shannon_W").margin
        self.assertTrue(-1e-6 <= margin <= 1e-4)
        self.assertAlmostEqual(report.bound("renyi_W").margin, 0.0, delta=1e-6)
        self.assertAlmostEqual(report.bound("shannon_H").margin, 0.5 * math.log(4.5), delta=1e-4)
        self.assertAlmostEqual(report.bound("fisher").lhs, 4.0, delta=1e-3)
        for name in ("I_W", "I_H", "CC_W", "CC_H"):
            self.assertLess(abs(report.value(name)), 1e-4, name)

    def test_purity_invariant(self):
        for report in (self.ground, self.perturbed, self.excited):
            self.assertAlmostEqual(report.value("R2_W").real, math.log(2 * math.pi), delta=1e-4)

    def test_husimi_marginals_carry_more_entropy(self):
        for report in (self.ground, self.perturbed, self.excited):
            self.assertGreater(report.value("S_x_H").real - report.value("S_x_W").real, 0.1)
            self.assertGreater(report.value("S_p_H").real - report.value("S_p_W").real, 0.1)

    def test_complex_measures(self):
        self.assertEqual(self.ground.value("S_W").imag, 0.0)
        self.assertGreater(abs(self.excited.value("S_W").imag), 0.01)
        for name in ("S_H", "I_H", "CC_H"):
            self.assertEqual(self.excited.value(name).imag, 0.0, name)

    def test_bounds_reference_entries(self):
        names = {entry.name for entry in self.excited.entries}
        for check in self.excited.bounds:
            self.assertTrue(set(check.inputs) <= names, check.name)

    def test_deterministic(self):
        self.assertEqual(self.ground.entries, self.ground_again.entries)

    def test_incomplete_registry_is_rejected(self):
        entries = {entry.name: entry for entry in self.ground.entries}
        entries.pop("D_CS")
        with self.assertRaises(InvariantViolation):
            _check_complete(entries, (2, 4))

    def test_extra_orders_extend_the_registry(self):
        names = expected_measures((4, 6))
        self.assertIn("R6_W", names)
        self.assertIn("R2_x_W", names)
        with self.assertRaises(ValueError):
            expected_measures((3,))


class TestSweep(unittest.TestCase):
    def test_rows_are_sorted(self):
        table = sweep([1, 0], [0.1, 0.0], SMALL_GRID, workers=2)
        self.assertEqual([row.key for row in table.rows], [(0, 0.0), (0, 0.1), (1, 0.0), (1, 0.1)])
        self.assertFalse(table.failures)
        self.assertEqual(table.metadata["grid_x"], "-8.0:8.0:257")

    def test_rejects_bad_input(self):
        with self.assertRaises(ValueError):
            sweep([0], [0.1, 0.1], SMALL_GRID)
        with self.assertRaises(ValueError):
            sweep([], [0.1], SMALL_GRID)
        with self.assertRaises(ValueError):
            sweep([0], [], SMALL_GRID)
        with self.assertRaises(ValueError):
            sweep([0], [-0.1], SMALL_GRID)

    def test_failed_rows_are_recorded(self):
        narrow = GridSpec2D.square(GridSpec1D.symmetric(2.0, 129))
        table = sweep([0], [0.0], narrow, workers=1)
        self.assertEqual(len(table.failures), 1)
        row = table.failures[0]
        self.assertEqual(row.error_type, InvariantViolation.__name__)
        self.assertFalse(row.entries)

    def test_tolerance_overrides(self):
        self.assertEqual(Tolerances(mi_consistency=1e-3).as_dict()["mi_consistency"], 1e-3)
        with self.assertRaises(ValueError):
            Tolerances(normalization=0.0)

    def test_worker_count(self):
        with mock.patch.dict(os.environ, {"PSINFO_THREADS": "3"}):
            self.assertEqual(worker_count(), 3)
            self.assertEqual(worker_count(2), 2)
        with mock.patch.dict(os.environ, {"PSINFO_THREADS": "many"}):
            with self.assertRaises(ValueError):
                worker_count()
        with self.assertRaises(ValueError):
            worker_count(0)


if __name__ == '__main__':
    unittest.main()
