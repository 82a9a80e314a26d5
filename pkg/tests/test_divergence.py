import math
import unittest

import numpy as np

from psinfo.core import GridSpec1D
from psinfo.core import GridSpec2D
from psinfo.core import SampledField1D
from psinfo.core import SampledField2D
from psinfo.measures import DensityPair
from psinfo.measures import cauchy_schwarz_divergence
from psinfo.measures import kl_divergence
from psinfo.measures import mutual_information
from psinfo.measures import renyi_divergence
from psinfo.measures import renyi_mutual_information
from psinfo.measures import shannon_1d
from psinfo.oscillator import OscillatorSpec
from psinfo.oscillator import ho_eigenstate
from psinfo.oscillator import oscillator_state
from psinfo.phasespace import FieldKind
from psinfo.phasespace import husimi_from_wigner
from psinfo.phasespace import marginals
from psinfo.phasespace import wigner

GAUSSIAN_KL = 0.5 * (1 / 3 - 1 + math.log(3))


class TestDensityDivergences(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        grid = GridSpec2D.default()
        cls.w0 = wigner(ho_eigenstate(0), grid)
        cls.h0 = husimi_from_wigner(cls.w0)
        cls.pair = DensityPair(marginals(cls.w0).rho_x, marginals(cls.h0).rho_x)
        cls.momentum_pair = DensityPair(marginals(cls.w0).rho_p, marginals(cls.h0).rho_p)

    def test_kl_closed_form(self):
        self.assertAlmostEqual(kl_divergence(self.pair), GAUSSIAN_KL, delta=1e-5)
        reverse = kl_divergence(DensityPair(self.pair.q, self.pair.p))
        self.assertGreater(abs(reverse - GAUSSIAN_KL), 0.1)

    def test_kl_of_identical_densities(self):
        same = DensityPair(self.pair.p, self.pair.p)
        self.assertAlmostEqual(kl_divergence(same), 0.0, delta=1e-10)
        self.assertAlmostEqual(renyi_divergence(same, 2), 0.0, delta=1e-10)

    def test_kl_is_non_negative(self):
        rng = np.random.default_rng(7)
        grid = GridSpec1D(0.0, 1.0, 33)
        for _ in range(5):
            densities = []
            for _ in range(2):
                raw = rng.uniform(0.1, 1.0, grid.points)
                densities.append(SampledField1D(grid, raw / float(np.dot(grid.weights(), raw))))
            self.assertGreaterEqual(kl_divergence(DensityPair(*densities)), -1e-12)

    def test_renyi_divergence(self):
        self.assertAlmostEqual(renyi_divergence(self.pair, 1 + 1e-6), kl_divergence(self.pair), delta=1e-4)
        d2 = 0.5 * math.log(3) + 0.5 * math.log(1.5 / 2.5)
        self.assertAlmostEqual(renyi_divergence(self.pair, 2), d2, delta=1e-5)
        self.assertAlmostEqual(renyi_divergence(self.pair, 4), math.log(3) / 3, delta=1e-5)
        values = [renyi_divergence(self.pair, a) for a in (0.5, 2, 4)]
        self.assertEqual(values, sorted(values))
        with self.assertRaises(ValueError):
            renyi_divergence(self.pair, 1)

    def test_renyi_divergence_of_momentum_marginals(self):
        # Wigner p-marginal variance 1/2 against the Husimi one, 3/4.
        d4 = 0.5 * math.log(1.5) - math.log(2) / 6
        value = renyi_divergence(self.momentum_pair, 4)
        self.assertTrue(math.isfinite(value))
        self.assertAlmostEqual(value, d4, delta=1e-6)
        d2 = 0.5 * math.log(1.5) + 0.5 * math.log(0.75 / 1.0)
        self.assertAlmostEqual(renyi_divergence(self.momentum_pair, 2), d2, delta=1e-6)

    def test_pair_validation(self):
        other = SampledField1D(GridSpec1D.symmetric(8.0, 257), np.zeros(257))
        with self.assertRaises(ValueError):
            DensityPair(self.pair.p, other)
        zero = SampledField1D(self.pair.p.grid, np.zeros(self.pair.p.grid.points))
        with self.assertRaises(ValueError):
            kl_divergence(DensityPair(self.pair.p, zero))

    def test_cauchy_schwarz(self):
        w, h = self.w0.as_sampled(), self.h0.as_sampled()
        self.assertAlmostEqual(cauchy_schwarz_divergence(w, w), 0.0, delta=1e-10)
        expected = math.log(2.5 / math.sqrt(4.5))
        self.assertAlmostEqual(cauchy_schwarz_divergence(w, h), expected, delta=1e-5)
        self.assertAlmostEqual(cauchy_schwarz_divergence(w, h), cauchy_schwarz_divergence(h, w), delta=1e-12)
        scaled = SampledField2D(h.grid, 7.0 * h.values)
        self.assertAlmostEqual(cauchy_schwarz_divergence(w, scaled), cauchy_schwarz_divergence(w, h), delta=1e-10)
        with self.assertRaises(ValueError):
            cauchy_schwarz_divergence(w, SampledField2D(w.grid, np.zeros(w.grid.shape)))


class TestMutualInformation(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.grid = GridSpec2D.default()
        cls.fields = {}
        for n, lam in ((0, 0.0), (1, 0.0), (0, 0.1), (1, 0.1)):
            w = wigner(oscillator_state(OscillatorSpec(n, lam)), cls.grid)
            cls.fields[n, lam] = (w, husimi_from_wigner(w))

    def test_product_fields_are_uncorrelated(self):
        for field in self.fields[0, 0.0]:
            result = mutual_information(field)
            self.assertEqual(result.source, field.kind)
            self.assertAlmostEqual(abs(complex(result.direct)), 0.0, delta=1e-5)
            self.assertAlmostEqual(abs(complex(result.entropic)), 0.0, delta=1e-5)

    def test_forms_agree(self):
        for pair in self.fields.values():
            for field in pair:
                self.assertLess(mutual_information(field).discrepancy, 1e-4)

    def test_husimi_information_is_real(self):
        for n in (0, 1):
            result = mutual_information(self.fields[n, 0.1][1])
            self.assertEqual(result.direct.imag_part, 0.0)
            self.assertGreaterEqual(result.direct.real_part, -1e-9)

    def test_wigner_information_is_complex_for_excited_states(self):
        result = mutual_information(self.fields[1, 0.1][0])
        self.assertEqual(result.source, FieldKind.WIGNER)
        self.assertGreater(abs(result.direct.imag_part), 0.01)

    def test_renyi_mutual_information(self):
        w0, h0 = self.fields[0, 0.0]
        self.assertAlmostEqual(renyi_mutual_information(w0), 0.0, delta=1e-5)
        self.assertAlmostEqual(renyi_mutual_information(h0), 0.0, delta=1e-5)
        w1, h1 = self.fields[1, 0.0]
        self.assertTrue(math.isinf(renyi_mutual_information(w1)))
        self.assertTrue(math.isfinite(renyi_mutual_information(h1)))


class TestTrends(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        grid = GridSpec2D.default()
        cls.kl = {}
        cls.info = {}
        cls.entropy = {}
        for n in (0, 1):
            for lam in (0.0, 0.05, 0.1, 0.15, 0.2):
                w = wigner(oscillator_state(OscillatorSpec(n, lam)), grid)
                h = husimi_from_wigner(w)
                cls.kl[n, lam] = kl_divergence(DensityPair(marginals(w).rho_x, marginals(h).rho_x))
                cls.info[n, lam] = mutual_information(h).direct.real_part
                pair = marginals(w)
                cls.entropy[n, lam] = (shannon_1d(pair.rho_x), shannon_1d(pair.rho_p))

    def test_quartic_term_confines_position(self):
        lams = (0.0, 0.05, 0.1, 0.15, 0.2)
        position = [self.entropy[0, lam][0] for lam in lams]
        momentum = [self.entropy[0, lam][1] for lam in lams]
        self.assertAlmostEqual(position[0], (1 + math.log(math.pi)) / 2, delta=1e-6)
        self.assertEqual(position, sorted(position, reverse=True))
        self.assertAlmostEqual(position[-1], 1.001708, delta=1e-4)
        self.assertEqual(momentum, sorted(momentum))
        self.assertLess(momentum[0], momentum[-1])

    def test_marginal_kl_grows_with_coupling(self):
        series = [self.kl[0, lam] for lam in (0.0, 0.05, 0.1, 0.15, 0.2)]
        self.assertEqual(series, sorted(series))
        self.assertLess(series[0], series[-1])
        self.assertGreater(self.kl[1, 0.0], self.kl[0, 0.0])

    def test_husimi_information_grows_with_coupling(self):
        series = [self.info[0, lam] for lam in (0.0, 0.05, 0.1, 0.15, 0.2)]
        self.assertEqual(series, sorted(series))
        self.assertLess(series[0], series[-1])


if __name__ == '__main__':
    unittest.main()
