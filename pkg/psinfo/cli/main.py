# -*- coding: utf-8 -*-
"""psinfo command-line entry point."""
import logging
import os
import sys
from typing import List
from typing import Optional

import numpy as np

from ..exceptions import InvariantViolation
from ..exceptions import PsInfoError
from ..measures.survival import survival_1d
from ..measures.survival import survival_2d
from ..oscillator.constants import Space
from ..oscillator.objects import OscillatorSpec
from ..oscillator.states import oscillator_state
from ..phasespace.objects import FieldKind
from ..phasespace.phasespace import husimi_from_wigner
from ..phasespace.phasespace import marginals
from ..phasespace.phasespace import wigner
from ..report.report import sweep
from .config import CliConfig
from .config import build_parser
from .constants import EXIT_INVARIANT
from .constants import EXIT_OK
from .constants import EXIT_PARTIAL
from .constants import EXIT_USAGE
from .field_file import FieldFile
from .render import render_ppm
from .render import render_svg
from .tables import bounds_json
from .tables import first_violations
from .tables import survival_csv
from .tables import sweep_csv

logger = logging.getLogger("psinfo")

RENDERERS = {"svg": render_svg, "ppm": render_ppm}


def _write_text(path: str, text: str) -> None:
    with open(path, "w", newline="") as stream:
        stream.write(text)
    logger.info("Wrote %s", path)


def _write_bytes(path: str, data: bytes) -> None:
    with open(path, "wb") as stream:
        stream.write(data)
    logger.info("Wrote %s", path)


def _state_fields(config: CliConfig):
    spec = OscillatorSpec(config.n_values[0], config.lambdas[0])
    psi = oscillator_state(spec, Space.POSITION, config.grid.x, config.coupling)
    w = wigner(psi, config.grid)
    return spec, w, husimi_from_wigner(w, config.s)


def cmd_field(config: CliConfig) -> int:
    spec, w, h = _state_fields(config)
    field = w if config.kind is FieldKind.WIGNER else h
    stem = os.path.join(config.out, f"{field.kind.value}_n{spec.n}_lam{spec.lam:g}")

    if "csv" in config.formats:
        metadata = {"n": spec.n, "lambda": repr(spec.lam), "s": repr(config.s),
                    "coupling": config.coupling.value}
        record = FieldFile.from_field(field, f"{stem}.csv", metadata)
        record.save_file()
        logger.info("Wrote %s.csv", stem)
    for fmt in config.formats:
        if fmt in RENDERERS:
            _write_bytes(f"{stem}.{fmt}", RENDERERS[fmt](field))
    return EXIT_OK


def _run_sweep(config: CliConfig):
    return sweep(config.n_values, config.lambdas, config.grid, s=config.s,
                 alphas=config.alphas, coupling=config.coupling,
                 tolerances=config.tolerances, workers=config.workers)


def _sweep_status(table) -> int:
    failures = table.failures
    if not failures:
        return EXIT_OK
    for row in failures:
        logger.error("n=%d lambda=%g failed: %s", row.state.n, row.state.lam, row.error)
    if any(row.error_type == InvariantViolation.__name__ for row in failures):
        return EXIT_INVARIANT
    return EXIT_PARTIAL


def cmd_sweep(config: CliConfig) -> int:
    table = _run_sweep(config)
    if "csv" in config.formats:
        _write_text(os.path.join(config.out, "sweep.csv"), sweep_csv(table))
    if "json" in config.formats:
        _write_text(os.path.join(config.out, "bounds.json"), bounds_json(table))
    return _sweep_status(table)


def cmd_bounds(config: CliConfig) -> int:
    table = _run_sweep(config)
    _write_text(os.path.join(config.out, "bounds.json"), bounds_json(table))
    for n, lam in first_violations(table).items():
        if lam is not None:
            logger.warning("n=%s: uncertainty bound first fails at lambda=%g", n, lam)
    return _sweep_status(table)


def cmd_render(config: CliConfig) -> int:
    field = FieldFile(config.source).parse_file().to_field()
    _write_bytes(config.out, RENDERERS[config.formats[0]](field))
    return EXIT_OK


def cmd_survival(config: CliConfig) -> int:
    spec, w, h = _state_fields(config)
    grid = config.grid
    if not grid.x.min <= config.a0 <= grid.x.max:
        raise ValueError(f"--a0 {config.a0} lies outside the grid")
    row = int(np.argmin(np.abs(grid.x.axis - config.a0)))

    columns = {}
    for label, field in (("W", w), ("H", h)):
        pair = marginals(field, config.tolerances.normalization)
        columns[f"s_x_{label}"] = survival_1d(pair.rho_x).values
        columns[f"s_p_{label}"] = survival_1d(pair.rho_p).values
        columns[f"s_{label}_a0"] = survival_2d(field).values[row]
    metadata = {"n": spec.n, "lambda": repr(spec.lam), "a0": repr(float(grid.x.axis[row])),
                "grid_x": str(grid.x), "grid_p": str(grid.p)}
    path = os.path.join(config.out, f"survival_n{spec.n}_lam{spec.lam:g}.csv")
    _write_text(path, survival_csv(grid.p.axis, columns, metadata))
    return EXIT_OK


COMMANDS = {
    "field": cmd_field,
    "sweep": cmd_sweep,
    "bounds": cmd_bounds,
    "render": cmd_render,
    "survival": cmd_survival,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr, force=True)
    logging.captureWarnings(True)

    try:
        config = CliConfig.from_args(args)
    except ValueError as exc:
        logger.error("%s", exc)
        return EXIT_USAGE

    try:
        return COMMANDS[config.command](config)
    except InvariantViolation as exc:
        logger.error("Numerical invariant violated: %s", exc)
        return EXIT_INVARIANT
    except (PsInfoError, ValueError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE
    except OSError as exc:
        logger.error("I/O error: %s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
