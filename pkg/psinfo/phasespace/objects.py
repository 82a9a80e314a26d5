# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..core.objects import GridSpec2D
from ..core.objects import SampledField1D
from ..core.objects import SampledField2D
from ..exceptions import GridError


class FieldKind(str, Enum):
    WIGNER = "wigner"
    HUSIMI = "husimi"


@dataclass(frozen=True)
class PhaseSpaceField:
    """A real W(x, p) or H(x, p) sampled on an (x, p) grid, x along axis 0."""
    grid: GridSpec2D
    values: np.ndarray
    kind: FieldKind
    label: str = ""

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64, copy=True)
        if values.shape != self.grid.shape:
            raise GridError(f"Field shape {values.shape} does not match grid {self.grid.shape}")
        if not np.all(np.isfinite(values)):
            raise GridError(f"Field {self.label!r} holds non-finite values")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "kind", FieldKind(self.kind))

    def as_sampled(self) -> SampledField2D:
        return SampledField2D(self.grid, self.values)


@dataclass(frozen=True)
class MarginalPair:
    """Position and momentum marginals of a phase-space field."""
    rho_x: SampledField1D
    rho_p: SampledField1D
