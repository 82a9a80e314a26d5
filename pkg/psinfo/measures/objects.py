# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..core.objects import GridSpec1D
from ..core.objects import GridSpec2D
from ..core.objects import SampledField1D
from ..phasespace.objects import FieldKind
from .constants import BOUND_SLACK


@dataclass(frozen=True)
class ComplexEntropy:
    """An entropy-like quantity in nats that may pick up an imaginary part."""
    real_part: float
    imag_part: float = 0.0

    @classmethod
    def from_complex(cls, value: complex) -> ComplexEntropy:
        value = complex(value)
        return cls(float(value.real), float(value.imag))

    def __complex__(self) -> complex:
        return complex(self.real_part, self.imag_part)

    def __add__(self, other) -> ComplexEntropy:
        return ComplexEntropy.from_complex(complex(self) + complex(other))

    def __sub__(self, other) -> ComplexEntropy:
        return ComplexEntropy.from_complex(complex(self) - complex(other))

    @property
    def is_real(self) -> bool:
        return self.imag_part == 0.0


@dataclass(frozen=True)
class BoundCheck:
    """Verdict of an inequality lhs >= rhs."""
    lhs: float
    rhs: float
    satisfied: bool
    margin: float
    name: str = ""
    inputs: Tuple[str, ...] = ()

    @classmethod
    def evaluate(cls, lhs: float, rhs: float, name: str = "",
                 inputs: Tuple[str, ...] = ()) -> BoundCheck:
        margin = float(lhs) - float(rhs)
        return cls(float(lhs), float(rhs), margin >= -BOUND_SLACK, margin, name, tuple(inputs))


@dataclass(frozen=True)
class DensityPair:
    """Two densities P and Q on the same grid."""
    p: SampledField1D
    q: SampledField1D

    def __post_init__(self) -> None:
        if self.p.grid != self.q.grid:
            raise ValueError("DensityPair members must share a grid")


@dataclass(frozen=True)
class MutualInformationResult:
    """Mutual information by direct integral and by entropy difference."""
    direct: ComplexEntropy
    entropic: ComplexEntropy
    source: FieldKind

    @property
    def discrepancy(self) -> float:
        return abs(complex(self.direct) - complex(self.entropic))


@dataclass(frozen=True)
class SurvivalField1D:
    """s(a) = integral of a density from a to the upper grid edge."""
    grid: GridSpec1D
    values: np.ndarray

    def as_sampled(self) -> SampledField1D:
        return SampledField1D(self.grid, self.values)


@dataclass(frozen=True)
class SurvivalField2D:
    """s(a, b) = double integral of a field over [a, max] x [b, max]."""
    grid: GridSpec2D
    values: np.ndarray
    kind: FieldKind
