# -*- coding: utf-8 -*-
"""CSV and JSON serialization of sweeps, bound verdicts and survival slices."""
import csv
import io
import json
import math
from typing import Dict
from typing import List
from typing import Optional

import numpy as np

from ..measures.objects import BoundCheck
from ..report.constants import COMPLEX_MEASURES
from ..report.objects import SweepTable
from ..report.report import expected_measures
from .constants import FILE_VERSION
from .constants import SURVIVAL_FILE_HEADER
from .constants import SWEEP_FILE_HEADER
from .field_file import fmt


def sweep_columns(table: SweepTable) -> List[str]:
    columns = ["n", "lambda"]
    for name in expected_measures(table.metadata.get("alphas", ())):
        if name in COMPLEX_MEASURES:
            columns.extend((f"{name}_re", f"{name}_im"))
        else:
            columns.append(name)
    columns.append("error")
    return columns


def sweep_csv(table: SweepTable) -> str:
    """One row per state; complex measures are split into _re and _im columns."""
    out = io.StringIO()
    out.write(f"{SWEEP_FILE_HEADER}{FILE_VERSION}\n")
    out.write(f"# version={table.version}\n")
    for key, value in table.metadata.items():
        out.write(f"# {key}={json.dumps(value, sort_keys=True)}\n")

    columns = sweep_columns(table)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in table.rows:
        cells: Dict[str, str] = {"n": str(row.state.n), "lambda": fmt(row.state.lam),
                                 "error": row.error or ""}
        for entry in row.entries:
            if entry.name in COMPLEX_MEASURES:
                cells[f"{entry.name}_re"] = fmt(entry.real)
                cells[f"{entry.name}_im"] = fmt(entry.imag)
            else:
                cells[entry.name] = fmt(entry.real)
        writer.writerow([cells.get(column, "") for column in columns])
    return out.getvalue()


def _json_number(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


def bound_dict(check: BoundCheck) -> dict:
    return {
        "name": check.name,
        "lhs": _json_number(check.lhs),
        "rhs": check.rhs,
        "margin": _json_number(check.margin),
        "satisfied": check.satisfied,
        "inputs": list(check.inputs),
    }


def first_violations(table: SweepTable) -> Dict[str, Optional[float]]:
    """Smallest lambda per n at which some bound fails, or None."""
    found: Dict[str, Optional[float]] = {}
    for row in table.rows:
        key = str(row.state.n)
        found.setdefault(key, None)
        if found[key] is None and any(not check.satisfied for check in row.bounds):
            found[key] = row.state.lam
    return found


def bounds_json(table: SweepTable) -> str:
    states = []
    for row in table.rows:
        states.append({
            "n": row.state.n,
            "lambda": row.state.lam,
            "bounds": [bound_dict(check) for check in row.bounds],
            "error": row.error,
        })
    summary = {
        "schema": FILE_VERSION,
        "version": table.version,
        "metadata": table.metadata,
        "first_violation": first_violations(table),
        "states": states,
    }
    return json.dumps(summary, indent=2, sort_keys=True) + "\n"


def survival_csv(thresholds: np.ndarray, columns: Dict[str, np.ndarray],
                 metadata: Dict[str, object]) -> str:
    """`threshold` followed by one column per survival curve."""
    out = io.StringIO()
    out.write(f"{SURVIVAL_FILE_HEADER}{FILE_VERSION}\n")
    for key, value in metadata.items():
        out.write(f"# {key}={value}\n")
    writer = csv.writer(out, lineterminator="\n")
    names = list(columns)
    writer.writerow(["threshold"] + names)
    for k, threshold in enumerate(thresholds):
        writer.writerow([fmt(threshold)] + [fmt(columns[name][k]) for name in names])
    return out.getvalue()
