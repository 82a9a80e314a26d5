# -*- coding: utf-8 -*-
from __future__ import annotations

import csv
import io
from typing import Dict
from typing import List
from typing import Optional

import numpy as np

from ..core.objects import GridSpec1D
from ..core.objects import GridSpec2D
from ..exceptions import GridError
from ..exceptions import InvariantViolation
from ..phasespace.objects import FieldKind
from ..phasespace.objects import PhaseSpaceField
from .constants import FIELD_FILE_HEADER
from .constants import FILE_VERSION
from .constants import FLOAT_FORMAT
from .constants import SUPPORTED_VERSIONS

FIELD_COLUMNS = ["x", "p", "value"]


def fmt(value: float) -> str:
    return format(float(value), FLOAT_FORMAT)


def check_header(line: str, header: str) -> int:
    """Returns the schema version of a `# psinfo ... csv vN` line."""
    if line[:len(header)] != header:
        raise ValueError(f"line 1: expected {header!r}, got {line!r}")
    try:
        version = int(line[len(header):])
    except ValueError:
        raise ValueError(f"line 1: malformed schema version in {line!r}") from None
    if version not in SUPPORTED_VERSIONS:
        raise InvariantViolation(f"line 1: unsupported schema version {version}")
    return version


class FieldFile:
    """A phase-space field stored as x, p, value rows below a versioned header."""

    def __init__(self, file_path: str):
        self.__file_path: str = file_path

        self.file_version: int = 0
        self.metadata: Dict[str, str] = {}
        self.grid: Optional[GridSpec2D] = None
        self.values: Optional[np.ndarray] = None

    @classmethod
    def from_field(cls, field: PhaseSpaceField, file_path: str,
                   metadata: Optional[Dict[str, object]] = None) -> FieldFile:
        """Wraps a computed field for saving."""
        self = cls(file_path)
        self.file_version = FILE_VERSION
        self.metadata = {"kind": field.kind.value, "label": field.label}
        self.metadata.update({key: str(value) for key, value in (metadata or {}).items()})
        self.metadata["grid_x"] = str(field.grid.x)
        self.metadata["grid_p"] = str(field.grid.p)
        self.grid = field.grid
        self.values = np.array(field.values)
        return self

    def save_file(self) -> None:
        with open(self.__file_path, "w", newline="") as stream:
            stream.write(self.unparse_file())

    def unparse_file(self) -> str:
        out = io.StringIO()
        out.write(f"{FIELD_FILE_HEADER}{self.file_version}\n")
        for key, value in self.metadata.items():
            out.write(f"# {key}={value}\n")
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(FIELD_COLUMNS)
        xs, ps = self.grid.x.axis, self.grid.p.axis
        for i, x in enumerate(xs):
            for j, p in enumerate(ps):
                writer.writerow([fmt(x), fmt(p), fmt(self.values[i, j])])
        return out.getvalue()

    def parse_file(self) -> FieldFile:
        """Parses the header, metadata and samples."""
        with open(self.__file_path, "r", newline="") as stream:
            lines = stream.read().split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if not lines:
            raise ValueError("line 1: empty field file")

        self.file_version = check_header(lines[0].strip(), FIELD_FILE_HEADER)

        number = 1
        for number, line in enumerate(lines[1:], start=2):
            if not line.startswith("#"):
                break
            key, sep, value = line[1:].strip().partition("=")
            if not sep or not key:
                raise ValueError(f"line {number}: expected '# key=value', got {line!r}")
            self.metadata[key.strip()] = value.strip()
        else:
            raise ValueError(f"line {number}: missing column header")

        for name in ("kind", "grid_x", "grid_p"):
            if name not in self.metadata:
                raise ValueError(f"metadata entry {name!r} is missing")
        try:
            self.grid = GridSpec2D(GridSpec1D.from_string(self.metadata["grid_x"]),
                                   GridSpec1D.from_string(self.metadata["grid_p"]))
        except GridError as exc:
            raise ValueError(f"metadata grid: {exc}") from None

        columns = next(csv.reader([lines[number - 1]]))
        if columns != FIELD_COLUMNS:
            raise ValueError(f"line {number}: expected columns {FIELD_COLUMNS}, got {columns}")
        self.values = self._parse_rows(lines[number:], number + 1)
        return self

    def _parse_rows(self, rows: List[str], first_line: int) -> np.ndarray:
        xs, ps = self.grid.x.axis, self.grid.p.axis
        expected = len(xs) * len(ps)
        if len(rows) != expected:
            raise ValueError(
                f"line {first_line + len(rows) - 1}: expected {expected} samples, got {len(rows)}")

        values = np.empty(self.grid.shape)
        for k, row in enumerate(csv.reader(rows)):
            number = first_line + k
            if len(row) != 3:
                raise ValueError(f"line {number}: expected 3 fields, got {len(row)}")
            try:
                x, p, value = (float(cell) for cell in row)
            except ValueError:
                raise ValueError(f"line {number}: non-numeric field in {row}") from None
            i, j = divmod(k, len(ps))
            if not (np.isclose(x, xs[i], rtol=0, atol=1e-9) and np.isclose(p, ps[j], rtol=0, atol=1e-9)):
                raise ValueError(f"line {number}: ({x}, {p}) is off the declared grid")
            if not np.isfinite(value):
                raise ValueError(f"line {number}: non-finite value {row[2]!r}")
            values[i, j] = value
        return values

    def to_field(self) -> PhaseSpaceField:
        kind = FieldKind(self.metadata["kind"])
        return PhaseSpaceField(self.grid, self.values, kind, self.metadata.get("label", ""))
