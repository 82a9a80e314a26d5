import math
import unittest

import numpy as np

from psinfo.core import GridSpec2D
from psinfo.core import SampledField2D
from psinfo.core import integrate_2d
from psinfo.core import integrate_axis
from psinfo.oscillator import OscillatorSpec
from psinfo.oscillator import Space
from psinfo.oscillator import ho_eigenstate
from psinfo.oscillator import oscillator_state
from psinfo.phasespace import FieldKind
from psinfo.phasespace import expectation
from psinfo.phasespace import husimi_from_wigner
from psinfo.phasespace import marginals
from psinfo.phasespace import negativity
from psinfo.phasespace import purity
from psinfo.phasespace import wigner

ORIGIN = 256


def variance(rho):
    return float(integrate_axis(rho.axis ** 2 * rho.values, rho.grid, axis=0))


class TestPhaseSpace(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = GridSpec2D.default()
        cls.psi0 = ho_eigenstate(0)
        cls.psi1 = ho_eigenstate(1)
        cls.w0 = wigner(cls.psi0, cls.grid)
        cls.w1 = wigner(cls.psi1, cls.grid)
        cls.h0 = husimi_from_wigner(cls.w0)
        cls.h1 = husimi_from_wigner(cls.w1)

    def test_wigner_origin(self):
        self.assertEqual(self.w0.kind, FieldKind.WIGNER)
        self.assertAlmostEqual(self.w0.values[ORIGIN, ORIGIN], 1 / math.pi, delta=1e-8)
        self.assertAlmostEqual(self.w1.values[ORIGIN, ORIGIN], -1 / math.pi, delta=1e-6)

    def test_normalization(self):
        for field in (self.w0, self.w1, self.h0, self.h1):
            self.assertAlmostEqual(integrate_2d(field.as_sampled()).real, 1.0, delta=1e-6)

    def test_husimi_closed_form(self):
        self.assertEqual(self.h0.kind, FieldKind.HUSIMI)
        self.assertAlmostEqual(self.h0.values[ORIGIN, ORIGIN], math.sqrt(2) / (3 * math.pi), delta=1e-6)
        self.assertGreaterEqual(self.h1.values.min(), -1e-10)

    def test_marginals(self):
        wm = marginals(self.w0)
        self.assertAlmostEqual(wm.rho_x.values[ORIGIN], 1 / math.sqrt(math.pi), delta=1e-8)
        hm = marginals(self.h0)
        self.assertAlmostEqual(hm.rho_x.values[ORIGIN], 1 / math.sqrt(3 * math.pi), delta=1e-6)
        self.assertAlmostEqual(marginals(self.w1).rho_x.values[ORIGIN], 0.0, delta=1e-8)

    def test_wigner_marginals_are_densities(self):
        psi = oscillator_state(OscillatorSpec(1, 0.1), Space.POSITION, self.grid.x)
        phi = oscillator_state(OscillatorSpec(1, 0.1), Space.MOMENTUM, self.grid.p)
        pair = marginals(wigner(psi, self.grid))
        np.testing.assert_allclose(pair.rho_x.values, psi.density().values, atol=1e-6)
        np.testing.assert_allclose(pair.rho_p.values, phi.density().values, atol=1e-6)

    def test_smoothing_adds_variance(self):
        for w, h in ((self.w0, self.h0), (self.w1, self.h1)):
            wm, hm = marginals(w), marginals(h)
            self.assertAlmostEqual(variance(hm.rho_x), variance(wm.rho_x) + 1.0, delta=1e-5)
            self.assertAlmostEqual(variance(hm.rho_p), variance(wm.rho_p) + 0.25, delta=1e-5)

    def test_purity(self):
        for w in (self.w0, self.w1):
            self.assertAlmostEqual(purity(w), 1 / (2 * math.pi), delta=1e-5)

    def test_expectation(self):
        one = SampledField2D.from_function(self.grid, lambda x, p: np.ones_like(x))
        energy = SampledField2D.from_function(self.grid, lambda x, p: (x * x + p * p) / 2)
        self.assertAlmostEqual(expectation(one, self.w0), 1.0, delta=1e-6)
        self.assertAlmostEqual(expectation(energy, self.w0), 0.5, delta=1e-6)
        self.assertAlmostEqual(expectation(energy, self.w1), 1.5, delta=1e-6)
        with self.assertRaises(ValueError):
            expectation(one, self.h0)

    def test_even_state_symmetry(self):
        w = wigner(oscillator_state(OscillatorSpec(0, 0.1)), self.grid)
        np.testing.assert_allclose(w.values, w.values[::-1, ::-1], atol=1e-10)

    def test_negativity(self):
        mass, volume = negativity(self.w0)
        self.assertAlmostEqual(mass, 0.0, delta=1e-12)
        mass, volume = negativity(self.w1)
        self.assertAlmostEqual(mass, 1 - 2 / math.sqrt(math.e), delta=1e-3)
        self.assertAlmostEqual(volume, -2 * mass, delta=1e-5)

    def test_husimi_width_parameter(self):
        h = husimi_from_wigner(self.w0, s=2.0)
        self.assertAlmostEqual(integrate_2d(h.as_sampled()).real, 1.0, delta=1e-6)
        self.assertAlmostEqual(variance(marginals(h).rho_p), 0.5 + 1 / 16, delta=1e-5)

    def test_argument_checks(self):
        with self.assertRaises(ValueError):
            husimi_from_wigner(self.h0)
        with self.assertRaises(ValueError):
            husimi_from_wigner(self.w0, s=0.0)
        with self.assertRaises(ValueError):
            wigner(ho_eigenstate(0, Space.MOMENTUM), self.grid)


if __name__ == '__main__':
    unittest.main()
