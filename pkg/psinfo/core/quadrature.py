# -*- coding: utf-8 -*-
"""Composite Simpson quadrature on uniform grids."""

import numpy as np
from scipy.integrate import cumulative_simpson
from scipy.integrate import simpson

from ..exceptions import GridError
from .objects import GridSpec1D
from .objects import SampledField1D
from .objects import SampledField2D
from .objects import _first_non_finite


def _simpson(values: np.ndarray, dx: float, axis: int = -1):
    if np.iscomplexobj(values):
        return (simpson(values.real, dx=dx, axis=axis)
                + 1j * simpson(values.imag, dx=dx, axis=axis))
    return simpson(values, dx=dx, axis=axis)


def _check_finite(values: np.ndarray) -> None:
    bad = _first_non_finite(values)
    if bad is not None:
        raise GridError(f"Cannot integrate non-finite sample {values[bad]!r} at index {bad}")


def integrate_1d(f: SampledField1D) -> complex:
    """Integral of the samples over [grid.min, grid.max]."""
    _check_finite(f.values)
    return complex(_simpson(f.values, f.grid.spacing))


def integrate_2d(f: SampledField2D) -> complex:
    """Tensor-product Simpson integral over both axes."""
    _check_finite(f.values)
    inner = _simpson(f.values, f.grid.p.spacing, axis=1)
    return complex(_simpson(inner, f.grid.x.spacing))


def integrate_axis(values: np.ndarray, grid: GridSpec1D, axis: int) -> np.ndarray:
    """Integrates an array along one axis sampled on `grid`."""
    _check_finite(values)
    return _simpson(values, grid.spacing, axis=axis)


def suffix_integral(values: np.ndarray, grid: GridSpec1D, axis: int = -1) -> np.ndarray:
    """s[i] = integral of values from axis[i] to grid.max along `axis`.

    The last entry is exactly zero; the first equals the full integral up to rounding.
    """
    _check_finite(values)
    flipped = np.flip(values, axis=axis)
    if np.iscomplexobj(flipped):
        acc = (cumulative_simpson(flipped.real, dx=grid.spacing, axis=axis, initial=0.0)
               + 1j * cumulative_simpson(flipped.imag, dx=grid.spacing, axis=axis, initial=0.0))
    else:
        acc = cumulative_simpson(flipped, dx=grid.spacing, axis=axis, initial=0.0)
    return np.flip(acc, axis=axis)


def tail_extent(decay_scale: float, tolerance: float) -> float:
    """X where exp(-(X / decay_scale)^2) reaches tolerance; the tail is below it for every |x| > X."""
    if not 0.0 < tolerance < 1.0:
        raise ValueError(f"tolerance must lie in (0, 1), got {tolerance}")
    if decay_scale <= 0:
        raise ValueError(f"decay_scale must be positive, got {decay_scale}")
    return float(decay_scale * np.sqrt(-np.log(tolerance)))


def convolution_matrix(target: GridSpec1D, source: GridSpec1D,
                       kernel) -> np.ndarray:
    """K[i, j] = kernel(target_i - source_j) * w_j, so K @ f integrates f against the kernel."""
    diff = target.axis[:, None] - source.axis[None, :]
    return kernel(diff) * source.weights()[None, :]
