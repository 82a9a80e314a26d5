# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from ..core.objects import GridSpec2D
from ..measures.constants import MI_CONSISTENCY_TOLERANCE
from ..measures.objects import BoundCheck
from ..oscillator.objects import OscillatorSpec
from ..phasespace.constants import MARGINAL_TOLERANCE

TOLERANCE_NAMES = ("mi_consistency", "normalization")


@dataclass(frozen=True)
class Tolerances:
    """Overridable numerical tolerances."""
    mi_consistency: float = MI_CONSISTENCY_TOLERANCE
    normalization: float = MARGINAL_TOLERANCE

    def __post_init__(self) -> None:
        for name in TOLERANCE_NAMES:
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"Tolerance {name} must be positive, got {value!r}")

    def as_dict(self) -> Dict[str, float]:
        return {name: getattr(self, name) for name in TOLERANCE_NAMES}


@dataclass(frozen=True)
class MeasureEntry:
    """One named measure; real measures have imag = 0."""
    name: str
    real: float
    imag: float = 0.0


@dataclass
class MeasureReport:
    """Every measure and bound verdict for one (n, lambda) state."""
    state: OscillatorSpec
    grid: GridSpec2D
    entries: List[MeasureEntry] = field(default_factory=list)
    bounds: List[BoundCheck] = field(default_factory=list)
    error: Optional[str] = None
    error_type: Optional[str] = None

    def __post_init__(self) -> None:
        names = [entry.name for entry in self.entries]
        if len(names) != len(set(names)):
            raise ValueError(f"Duplicate measure names in report for {self.state}")
        known = set(names)
        for bound in self.bounds:
            missing = [name for name in bound.inputs if name not in known]
            if missing:
                raise ValueError(f"Bound {bound.name!r} refers to unknown measures {missing}")

    @property
    def key(self) -> Tuple[int, float]:
        return self.state.key

    @property
    def failed(self) -> bool:
        return self.error is not None

    def value(self, name: str) -> complex:
        for entry in self.entries:
            if entry.name == name:
                return complex(entry.real, entry.imag)
        raise KeyError(name)

    def bound(self, name: str) -> BoundCheck:
        for check in self.bounds:
            if check.name == name:
                return check
        raise KeyError(name)


@dataclass
class SweepTable:
    """Reports over an (n, lambda) lattice, ordered by key."""
    rows: List[MeasureReport]
    metadata: Dict[str, object] = field(default_factory=dict)
    version: str = ""

    def __post_init__(self) -> None:
        keys = [row.key for row in self.rows]
        if len(keys) != len(set(keys)):
            raise ValueError("Sweep table holds duplicate (n, lambda) keys")
        if keys != sorted(keys):
            raise ValueError("Sweep rows must be sorted by (n, lambda)")

    @property
    def failures(self) -> List[MeasureReport]:
        return [row for row in self.rows if row.failed]
