# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable
from typing import List

import numpy as np

from ..core.objects import GridSpec1D
from ..core.objects import SampledField1D
from ..core.quadrature import integrate_1d
from .constants import PERTURBATIVE_LIMIT
from .constants import Space


@dataclass(frozen=True)
class OscillatorSpec:
    """Quantum number n and quartic coupling of H = p^2/2 + x^2/2 + (lam/4) x^4."""
    n: int
    lam: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool) or self.n < 0:
            raise ValueError(f"Quantum number must be a non-negative integer, got {self.n!r}")
        if not np.isfinite(self.lam) or self.lam < 0:
            raise ValueError(f"Coupling lambda must be finite and >= 0, got {self.lam!r}")

    @property
    def perturbative(self) -> bool:
        return self.lam <= PERTURBATIVE_LIMIT

    @property
    def key(self):
        return (self.n, self.lam)


@dataclass(frozen=True)
class BasisExpansion:
    """Coefficients over harmonic-oscillator levels m = 0, 1, ..."""
    coefficients: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.array(self.coefficients, dtype=np.complex128, copy=True)
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def levels(self) -> List[int]:
        return [int(m) for m in np.flatnonzero(self.coefficients)]

    def normalized(self) -> BasisExpansion:
        scale = np.sqrt(np.sum(np.abs(self.coefficients) ** 2))
        if scale == 0:
            raise ValueError("Cannot normalize an empty expansion")
        return BasisExpansion(self.coefficients / scale)


@dataclass(frozen=True)
class Wavefunction:
    """A unit-norm amplitude in position or momentum space."""
    space: Space
    evaluator: Callable[[np.ndarray], np.ndarray]
    sampled: SampledField1D
    norm: float
    label: str = ""

    @classmethod
    def normalized(cls, space: Space, raw: Callable[[np.ndarray], np.ndarray],
                   grid: GridSpec1D, label: str = "") -> Wavefunction:
        """Rescales `raw` so that its squared modulus integrates to one on `grid`."""
        samples = np.asarray(raw(grid.axis), dtype=np.complex128)
        norm = float(np.sqrt(integrate_1d(SampledField1D(grid, np.abs(samples) ** 2)).real))
        if not norm > 0:
            raise ValueError(f"Wavefunction {label!r} vanishes on the grid")

        def evaluator(x):
            return np.asarray(raw(np.asarray(x, dtype=np.float64)), dtype=np.complex128) / norm

        return cls(space, evaluator, SampledField1D(grid, samples / norm, real=False), norm, label)

    def __call__(self, x) -> np.ndarray:
        return self.evaluator(x)

    @property
    def grid(self) -> GridSpec1D:
        return self.sampled.grid

    def density(self) -> SampledField1D:
        return SampledField1D(self.grid, np.abs(self.sampled.values) ** 2)
