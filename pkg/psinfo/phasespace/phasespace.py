# -*- coding: utf-8 -*-
"""Wigner and Husimi distributions of pure states, their marginals and averages."""
import logging
from typing import Optional
from typing import Tuple

import numpy as np

from ..core.constants import NEGATIVE_ERROR
from ..core.constants import NORMALIZATION_TOLERANCE
from ..core.objects import GridSpec1D
from ..core.objects import GridSpec2D
from ..core.objects import SampledField1D
from ..core.objects import SampledField2D
from ..core.quadrature import convolution_matrix
from ..core.quadrature import integrate_2d
from ..core.quadrature import integrate_axis
from ..exceptions import InvariantViolation
from ..oscillator.constants import Space
from ..oscillator.objects import Wavefunction
from .constants import IMAGINARY_ERROR
from .constants import IMAGINARY_SLACK
from .constants import MARGINAL_TOLERANCE
from .objects import FieldKind
from .objects import MarginalPair
from .objects import PhaseSpaceField

logger = logging.getLogger(__name__)


def _check_normalization(field: PhaseSpaceField) -> float:
    total = integrate_2d(field.as_sampled()).real
    if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
        logger.warning("%s field %r integrates to %.12g (grid truncation?)",
                       field.kind.value, field.label, total)
    return total


def wigner(psi: Wavefunction, grid: Optional[GridSpec2D] = None) -> PhaseSpaceField:
    """W(x, p) = (1/pi) int dy psi*(x - y) psi(x + y) e^{-2ipy}."""
    if psi.space is not Space.POSITION:
        raise ValueError("wigner expects a position-space wavefunction")
    grid = grid if grid is not None else GridSpec2D.default()

    x = grid.x.axis
    reach = max(abs(grid.x.min), abs(grid.x.max))
    lag = GridSpec1D.symmetric(reach, grid.x.points)
    y = lag.axis

    corr = np.conj(psi(np.subtract.outer(x, y))) * psi(np.add.outer(x, y))
    corr *= lag.weights()[None, :]
    phase = np.exp(-2j * np.multiply.outer(y, grid.p.axis))
    values = (corr @ phase) / np.pi

    residue = float(np.max(np.abs(values.imag)))
    if residue > IMAGINARY_ERROR:
        raise InvariantViolation(
            f"Wigner transform of {psi.label!r} has imaginary residue {residue:.3e}")
    if residue > IMAGINARY_SLACK:
        logger.warning("Discarding imaginary residue %.3e from Wigner transform of %r",
                       residue, psi.label)

    field = PhaseSpaceField(grid, values.real, FieldKind.WIGNER, psi.label)
    _check_normalization(field)
    return field


def husimi_from_wigner(w: PhaseSpaceField, s: float = 1.0) -> PhaseSpaceField:
    """Gaussian smoothing of W with kernel e^{-(x-x')^2/2} e^{-2 s^2 (p-p')^2}.

    The prefactor s/pi keeps the result normalized for any s; it is 1/pi at s = 1.
    """
    if w.kind is not FieldKind.WIGNER:
        raise ValueError(f"husimi_from_wigner expects a Wigner field, got {w.kind.value}")
    if not s > 0:
        raise ValueError(f"Smoothing parameter s must be positive, got {s}")

    grid = w.grid
    kx = convolution_matrix(grid.x, grid.x, lambda d: np.exp(-0.5 * d * d))
    kp = convolution_matrix(grid.p, grid.p, lambda d: np.exp(-2.0 * s * s * d * d))
    values = (s / np.pi) * (kx @ w.values @ kp.T)

    lowest = float(values.min())
    if lowest < -NEGATIVE_ERROR:
        raise InvariantViolation(f"Husimi field of {w.label!r} dips to {lowest:.3e}")

    field = PhaseSpaceField(grid, values, FieldKind.HUSIMI, w.label)
    _check_normalization(field)
    return field


def marginals(field: PhaseSpaceField, tolerance: float = MARGINAL_TOLERANCE) -> MarginalPair:
    """rho_x = int dp field, rho_p = int dx field."""
    grid = field.grid
    rho_x = SampledField1D(grid.x, integrate_axis(field.values, grid.p, axis=1))
    rho_p = SampledField1D(grid.p, integrate_axis(field.values, grid.x, axis=0))

    for name, rho in (("x", rho_x), ("p", rho_p)):
        total = float(integrate_axis(rho.values, rho.grid, axis=0))
        if abs(total - 1.0) > tolerance:
            raise InvariantViolation(
                f"{field.kind.value} {name}-marginal of {field.label!r} integrates to {total:.10g}")
    return MarginalPair(rho_x, rho_p)


def expectation(symbol: SampledField2D, w: PhaseSpaceField) -> float:
    """Overlap <A> = int int A(x, p) W(x, p) dx dp."""
    if w.kind is not FieldKind.WIGNER:
        raise ValueError("expectation values are defined through the Wigner field")
    if symbol.grid != w.grid:
        raise ValueError("symbol and field must share a grid")
    return integrate_2d(SampledField2D(w.grid, symbol.values * w.values, symbol.real)).real


def purity(field: PhaseSpaceField) -> float:
    """int int field^2; equals 1 / (2 pi) for any pure-state Wigner field."""
    return integrate_2d(SampledField2D(field.grid, field.values ** 2)).real


def negativity(w: PhaseSpaceField) -> Tuple[float, float]:
    """(negative mass, negativity volume int int |W| - 1)."""
    negative = np.minimum(w.values, 0.0)
    mass = integrate_2d(SampledField2D(w.grid, negative)).real
    volume = integrate_2d(SampledField2D(w.grid, np.abs(w.values))).real - 1.0
    return mass, volume
