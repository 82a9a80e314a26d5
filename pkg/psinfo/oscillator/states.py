# -*- coding: utf-8 -*-
"""Harmonic and first-order quartic-perturbed oscillator states (hbar = m = omega = 1)."""
import logging
import warnings
from typing import Optional

import numpy as np
from scipy.special import gammaln

from ..core.objects import GridSpec1D
from ..exceptions import PerturbativeRegimeWarning
from .constants import Coupling
from .constants import QUARTIC_PADDING
from .constants import Space
from .objects import BasisExpansion
from .objects import OscillatorSpec
from .objects import Wavefunction

logger = logging.getLogger(__name__)


def hermite(n: int, x):
    """Physicists' Hermite polynomial H_n by the three-term recurrence."""
    if n < 0:
        raise ValueError(f"Hermite degree must be >= 0, got {n}")
    x = np.asarray(x, dtype=np.float64)
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = 2.0 * x
    for k in range(1, n):
        prev, cur = cur, 2.0 * x * cur - 2.0 * k * prev
    return cur if cur.ndim else float(cur)


def hermite_function(n: int, x) -> np.ndarray:
    """Real eigenfunction pi^{-1/4} (2^n n!)^{-1/2} H_n(x) e^{-x^2/2}."""
    x = np.asarray(x, dtype=np.float64)
    log_norm = -0.25 * np.log(np.pi) - 0.5 * (n * np.log(2.0) + gammaln(n + 1))
    return np.exp(log_norm) * hermite(n, x) * np.exp(-0.5 * x * x)


def _momentum_phase(m: int) -> complex:
    # The Fourier transform maps h_m(x) to (-i)^m h_m(p).
    return (-1j) ** (m % 4)


def _default_grid(grid: Optional[GridSpec1D]) -> GridSpec1D:
    return grid if grid is not None else GridSpec1D.symmetric()


def _check_regime(spec: OscillatorSpec) -> None:
    if not spec.perturbative:
        warnings.warn(
            f"lambda={spec.lam} is outside the first-order perturbative regime",
            PerturbativeRegimeWarning, stacklevel=3)


def ho_eigenstate(n: int, space: Space = Space.POSITION,
                  grid: Optional[GridSpec1D] = None) -> Wavefunction:
    """Normalized harmonic-oscillator eigenstate |n>."""
    if n < 0:
        raise ValueError(f"Quantum number must be >= 0, got {n}")
    space = Space(space)
    phase = _momentum_phase(n) if space is Space.MOMENTUM else 1.0

    def raw(x):
        return phase * hermite_function(n, x)

    return Wavefunction.normalized(space, raw, _default_grid(grid), f"ho[n={n}]")


def _aho_polynomial(n: int, lam: float, space: Space, coupling: Coupling):
    # Ground state: the printed correction corresponds to kappa = lam; the
    # Hamiltonian's (lam/4) x^4 term gives kappa = lam / 4.
    kappa = lam if coupling is Coupling.PRINTED else lam / 4.0

    if n == 0 and space is Space.POSITION:
        def poly(x):
            x2 = x * x
            return 1.0 - (kappa / 4.0) * (0.25 * (4 * x2 * x2 - 12 * x2 + 3) + 3 * (2 * x2 - 1))
    elif n == 0:
        def poly(p):
            p2 = p * p
            return 16.0 - kappa * (4 * p2 * p2 - 36 * p2 + 15)
    elif space is Space.POSITION:
        def poly(x):
            x2 = x * x
            return (1.0 - (lam / 32.0) * (10 * (2 * x2 - 3) + 0.5 * (4 * x2 * x2 - 20 * x2 + 15))) * x
    else:
        # Printed prefactor is imaginary and negative; only the density matters.
        def poly(p):
            p2 = p * p
            return (64.0 - 75.0 * lam + 60.0 * lam * p2 - 4.0 * lam * p2 * p2) * p
    return poly


def aho_wavefunction(spec: OscillatorSpec, space: Space = Space.POSITION,
                     grid: Optional[GridSpec1D] = None,
                     coupling: Coupling = Coupling.HAMILTONIAN) -> Wavefunction:
    """Closed-form first-order anharmonic states for n = 0 and n = 1.

    The normalization is recomputed on the grid; the printed constants are not used.
    """
    if spec.n not in (0, 1):
        raise ValueError(
            f"Closed forms exist only for n in {{0, 1}}, got n={spec.n}; "
            "use perturbed_state_general for higher states")
    _check_regime(spec)
    space = Space(space)
    poly = _aho_polynomial(spec.n, spec.lam, space, Coupling(coupling))

    def raw(x):
        return poly(x) * np.exp(-0.5 * x * x)

    label = f"aho[n={spec.n}, lam={spec.lam}, {Coupling(coupling).value}]"
    return Wavefunction.normalized(space, raw, _default_grid(grid), label)


def quartic_matrix(levels: int) -> np.ndarray:
    """<m| x^4 |n> in a basis truncated to `levels` states, x = (a + a^dagger) / sqrt(2)."""
    lower = np.diag(np.sqrt(np.arange(1, levels, dtype=np.float64)), k=1)
    x = (lower + lower.T) / np.sqrt(2.0)
    return np.linalg.matrix_power(x, 4)


def first_order_expansion(spec: OscillatorSpec) -> BasisExpansion:
    """Rayleigh-Schroedinger first-order state for V = (lam/4) x^4, normalized."""
    n = spec.n
    x4 = quartic_matrix(n + 5 + QUARTIC_PADDING)
    coeffs = np.zeros(n + 5, dtype=np.complex128)
    coeffs[n] = 1.0
    if spec.lam:
        for m in (n - 4, n - 2, n + 2, n + 4):
            if m < 0:
                continue
            # E_n - E_m = n - m with omega = 1.
            coeffs[m] = (spec.lam / 4.0) * x4[m, n] / (n - m)
    return BasisExpansion(coeffs).normalized()


def perturbed_state_general(spec: OscillatorSpec, space: Space = Space.POSITION,
                            grid: Optional[GridSpec1D] = None) -> Wavefunction:
    """First-order perturbed state for any n, summed over eigenfunctions."""
    _check_regime(spec)
    space = Space(space)
    expansion = first_order_expansion(spec)
    terms = [(m, expansion.coefficients[m]) for m in expansion.levels]
    if space is Space.MOMENTUM:
        terms = [(m, c * _momentum_phase(m)) for m, c in terms]
    logger.debug("First-order expansion for %s: %s", spec, terms)

    def raw(x):
        total = np.zeros(np.shape(x), dtype=np.complex128)
        for m, c in terms:
            total = total + c * hermite_function(m, x)
        return total

    label = f"pt1[n={spec.n}, lam={spec.lam}]"
    return Wavefunction.normalized(space, raw, _default_grid(grid), label)


def oscillator_state(spec: OscillatorSpec, space: Space = Space.POSITION,
                     grid: Optional[GridSpec1D] = None,
                     coupling: Coupling = Coupling.HAMILTONIAN) -> Wavefunction:
    """Closed forms for n <= 1, the general expansion otherwise."""
    if spec.n in (0, 1):
        return aho_wavefunction(spec, space, grid, coupling)
    return perturbed_state_general(spec, space, grid)


def fourier_transform(psi: Wavefunction) -> Wavefunction:
    """phi(p) = (2 pi)^{-1/2} int psi(x) e^{-ipx} dx by direct quadrature."""
    if psi.space is not Space.POSITION:
        raise ValueError("fourier_transform expects a position-space wavefunction")
    source = psi.grid
    samples = psi.sampled.values

    def raw(p):
        p = np.asarray(p, dtype=np.float64)
        kernel = np.exp(-1j * np.multiply.outer(p.ravel(), source.axis)) * source.weights()[None, :]
        return (kernel @ samples).reshape(p.shape) / np.sqrt(2.0 * np.pi)

    return Wavefunction.normalized(Space.MOMENTUM, raw, source, f"F[{psi.label}]")
