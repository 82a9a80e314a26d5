import math
import unittest

import numpy as np

from psinfo.core import GridSpec1D
from psinfo.core import GridSpec2D
from psinfo.core import SampledField1D
from psinfo.core import SampledField2D
from psinfo.core import integrate_1d
from psinfo.core import integrate_2d
from psinfo.core import suffix_integral
from psinfo.core import tail_extent
from psinfo.exceptions import GridError


class TestGrid(unittest.TestCase):
    def test_default_grid(self):
        grid = GridSpec1D.symmetric()
        self.assertEqual(grid.points, 513)
        self.assertAlmostEqual(grid.spacing, 0.03125, places=15)
        self.assertAlmostEqual(grid.axis[256], 0.0, places=15)
        self.assertAlmostEqual(float(np.sum(grid.weights())), 16.0, places=12)

    def test_rejects_bad_grids(self):
        for args in ((0.0, 1.0, 4), (1.0, 1.0, 5), (0.0, 1.0, 1), (0.0, math.inf, 5), (0.0, 1.0, 5.0)):
            with self.assertRaises(GridError):
                GridSpec1D(*args)

    def test_from_string(self):
        self.assertEqual(GridSpec1D.from_string("-8:8:513"), GridSpec1D(-8.0, 8.0, 513))
        self.assertEqual(GridSpec1D.from_string(str(GridSpec1D(-2.5, 3.0, 7))), GridSpec1D(-2.5, 3.0, 7))
        for text in ("-8:8", "a:b:c", "-8:8:512"):
            with self.assertRaises(GridError):
                GridSpec1D.from_string(text)

    def test_refined_halves_spacing(self):
        grid = GridSpec1D.symmetric(4.0, 65)
        self.assertAlmostEqual(grid.refined().spacing, grid.spacing / 2, places=15)

    def test_non_finite_samples_name_the_index(self):
        grid = GridSpec1D(0.0, 1.0, 5)
        with self.assertRaises(GridError) as ctx:
            SampledField1D(grid, [0.0, 1.0, math.nan, 0.0, 0.0])
        self.assertIn("2", str(ctx.exception))
        with self.assertRaises(GridError):
            SampledField1D(grid, [0.0, 1.0])


class TestQuadrature(unittest.TestCase):
    def test_simpson_is_exact_for_cubics(self):
        grid = GridSpec1D(0.0, 1.0, 3)
        f = SampledField1D.from_function(grid, lambda x: x ** 3 - x + 2)
        self.assertAlmostEqual(integrate_1d(f).real, 0.25 - 0.5 + 2.0, places=14)

    def test_gaussian_2d(self):
        grid = GridSpec2D.default()
        f = SampledField2D.from_function(grid, lambda x, p: np.exp(-x * x - p * p))
        self.assertAlmostEqual(integrate_2d(f).real, math.pi, delta=1e-10)

    def test_complex_integrand(self):
        grid = GridSpec1D.symmetric()
        f = SampledField1D.from_function(grid, lambda x: np.exp(-x * x) * (1 + 2j), real=False)
        value = integrate_1d(f)
        self.assertAlmostEqual(value.real, math.sqrt(math.pi), delta=1e-12)
        self.assertAlmostEqual(value.imag, 2 * math.sqrt(math.pi), delta=1e-12)

    def test_suffix_integral(self):
        grid = GridSpec1D.symmetric()
        rho = np.exp(-grid.axis ** 2) / math.sqrt(math.pi)
        s = suffix_integral(rho, grid)
        self.assertEqual(s[-1], 0.0)
        self.assertAlmostEqual(s[0], integrate_1d(SampledField1D(grid, rho)).real, delta=1e-13)
        self.assertAlmostEqual(s[256], 0.5, delta=1e-8)

    def test_tail_extent(self):
        self.assertAlmostEqual(tail_extent(1.0, math.exp(-64.0)), 8.0, places=12)
        with self.assertRaises(ValueError):
            tail_extent(1.0, 1.5)
        with self.assertRaises(ValueError):
            tail_extent(-1.0, 0.1)

    def test_tail_extent_boundary(self):
        x = tail_extent(1.0, 1e-12)
        self.assertGreaterEqual(x, 5.26)
        self.assertAlmostEqual(math.exp(-x * x), 1e-12, delta=1e-24)
        self.assertLess(math.exp(-(x + 1e-6) ** 2), 1e-12)
        self.assertAlmostEqual(tail_extent(2.0, 1e-12), 2 * x, places=12)


if __name__ == '__main__':
    unittest.main()
