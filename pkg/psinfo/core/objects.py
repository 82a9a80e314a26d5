# -*- coding: utf-8 -*-
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable
from typing import Tuple

import numpy as np

from ..exceptions import GridError
from .constants import DEFAULT_EXTENT
from .constants import DEFAULT_POINTS


def _frozen_array(values, dtype=None) -> np.ndarray:
    arr = np.array(values, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr


def _first_non_finite(values: np.ndarray):
    bad = np.argwhere(~np.isfinite(values))
    if bad.size == 0:
        return None
    index = tuple(int(i) for i in bad[0])
    return index[0] if len(index) == 1 else index


@dataclass(frozen=True)
class GridSpec1D:
    """A uniform grid with an odd number of points (composite Simpson)."""
    min: float
    max: float
    points: int

    def __post_init__(self) -> None:
        if not isinstance(self.points, (int, np.integer)) or isinstance(self.points, bool):
            raise GridError(f"Grid points must be an integer, got {self.points!r}")
        if not (np.isfinite(self.min) and np.isfinite(self.max)):
            raise GridError(f"Grid bounds must be finite, got [{self.min}, {self.max}]")
        if not self.max > self.min:
            raise GridError(f"Grid max must exceed min, got [{self.min}, {self.max}]")
        if self.points < 3 or self.points % 2 == 0:
            raise GridError(f"Grid needs an odd number of points >= 3, got {self.points}")

    @classmethod
    def symmetric(cls, extent: float = DEFAULT_EXTENT, points: int = DEFAULT_POINTS) -> GridSpec1D:
        return cls(-float(extent), float(extent), int(points))

    @classmethod
    def from_string(cls, text: str) -> GridSpec1D:
        """Parses a `min:max:points` triple."""
        parts = text.split(":")
        if len(parts) != 3:
            raise GridError(f"Expected min:max:points, got {text!r}")
        try:
            return cls(float(parts[0]), float(parts[1]), int(parts[2]))
        except ValueError as exc:
            if isinstance(exc, GridError):
                raise
            raise GridError(f"Malformed grid {text!r}: {exc}") from None

    @property
    def spacing(self) -> float:
        return (self.max - self.min) / (self.points - 1)

    @property
    def axis(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.points)

    def weights(self) -> np.ndarray:
        """Composite Simpson weights h/3 * [1, 4, 2, ..., 2, 4, 1]."""
        w = np.ones(self.points)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        return w * (self.spacing / 3.0)

    def refined(self) -> GridSpec1D:
        """Same extent with the spacing halved."""
        return GridSpec1D(self.min, self.max, 2 * self.points - 1)

    def __str__(self) -> str:
        return f"{self.min!r}:{self.max!r}:{self.points}"


@dataclass(frozen=True)
class GridSpec2D:
    """Tensor-product (x, p) grid."""
    x: GridSpec1D
    p: GridSpec1D

    @classmethod
    def default(cls) -> GridSpec2D:
        axis = GridSpec1D.symmetric()
        return cls(axis, axis)

    @classmethod
    def square(cls, axis: GridSpec1D) -> GridSpec2D:
        return cls(axis, axis)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.x.points, self.p.points)

    def mesh(self) -> Tuple[np.ndarray, np.ndarray]:
        """Returns (X, P) with X varying along axis 0."""
        return np.meshgrid(self.x.axis, self.p.axis, indexing="ij")

    def refined(self) -> GridSpec2D:
        return GridSpec2D(self.x.refined(), self.p.refined())


@dataclass(frozen=True)
class SampledField1D:
    """Samples of a function on a 1D grid."""
    grid: GridSpec1D
    values: np.ndarray
    real: bool = True

    def __post_init__(self) -> None:
        values = np.asarray(self.values)
        if values.shape != (self.grid.points,):
            raise GridError(
                f"Expected {self.grid.points} samples, got shape {values.shape}")
        bad = _first_non_finite(values)
        if bad is not None:
            raise GridError(f"Non-finite sample {values[bad]!r} at index {bad}")
        if self.real:
            if np.iscomplexobj(values):
                values = values.real
            values = _frozen_array(values, dtype=np.float64)
        else:
            values = _frozen_array(values, dtype=np.complex128)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, grid: GridSpec1D, func: Callable[[np.ndarray], np.ndarray],
                      real: bool = True) -> SampledField1D:
        return cls(grid, func(grid.axis), real)

    @property
    def axis(self) -> np.ndarray:
        return self.grid.axis


@dataclass(frozen=True)
class SampledField2D:
    """Samples of a function on an (x, p) grid, x along axis 0."""
    grid: GridSpec2D
    values: np.ndarray
    real: bool = True

    def __post_init__(self) -> None:
        values = np.asarray(self.values)
        if values.shape != self.grid.shape:
            raise GridError(
                f"Expected samples of shape {self.grid.shape}, got {values.shape}")
        bad = _first_non_finite(values)
        if bad is not None:
            raise GridError(f"Non-finite sample {values[bad]!r} at index {bad}")
        if self.real:
            if np.iscomplexobj(values):
                values = values.real
            values = _frozen_array(values, dtype=np.float64)
        else:
            values = _frozen_array(values, dtype=np.complex128)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, grid: GridSpec2D, func: Callable[[np.ndarray, np.ndarray], np.ndarray],
                      real: bool = True) -> SampledField2D:
        x, p = grid.mesh()
        return cls(grid, func(x, p), real)
