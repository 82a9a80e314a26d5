# -*- coding: utf-8 -*-
from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass
from dataclasses import field
from typing import List
from typing import Optional
from typing import Tuple

from ..core.objects import GridSpec1D
from ..core.objects import GridSpec2D
from ..exceptions import GridError
from ..oscillator.constants import Coupling
from ..phasespace.objects import FieldKind
from ..report.constants import DEFAULT_ALPHAS
from ..report.constants import DEFAULT_LAMBDAS
from ..report.constants import DEFAULT_N_VALUES
from ..report.objects import TOLERANCE_NAMES
from ..report.objects import Tolerances
from ..report.report import renyi_orders
from ..report.report import worker_count
from ..version import __version__
from .constants import COMMAND_FORMATS
from .constants import DEFAULT_FORMATS
from .constants import EXIT_USAGE
from .constants import SINGLE_STATE_LAMBDA
from .constants import SINGLE_STATE_N


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit status 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_int_list(text: str) -> List[int]:
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise ValueError("expected a comma separated list of integers")
    try:
        return [int(item) for item in items]
    except ValueError:
        raise ValueError(f"malformed integer list {text!r}") from None


def parse_lambdas(text: str) -> List[float]:
    """A comma list or an inclusive start:stop:step range."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"expected start:stop:step, got {text!r}")
        try:
            start, stop, step = (float(part) for part in parts)
        except ValueError:
            raise ValueError(f"malformed lambda range {text!r}") from None
        if not step > 0 or stop < start:
            raise ValueError(f"lambda range {text!r} needs step > 0 and stop >= start")
        count = int(round((stop - start) / step)) + 1
        return [round(start + k * step, 12) for k in range(count)]

    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise ValueError("expected at least one lambda value")
    try:
        return [float(item) for item in items]
    except ValueError:
        raise ValueError(f"malformed lambda list {text!r}") from None


def parse_tolerances(overrides: Optional[List[str]]) -> Tolerances:
    values = {}
    for item in overrides or ():
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in TOLERANCE_NAMES:
            raise ValueError(f"--tol expects NAME=VALUE with NAME in {TOLERANCE_NAMES}, got {item!r}")
        try:
            values[name] = float(value)
        except ValueError:
            raise ValueError(f"--tol {name} needs a number, got {value!r}") from None
    return Tolerances(**values)


def parse_formats(text: Optional[str], command: str) -> Tuple[str, ...]:
    if text is None:
        return DEFAULT_FORMATS[command]
    formats = tuple(item.strip().lower() for item in text.split(",") if item.strip())
    allowed = COMMAND_FORMATS[command]
    bad = [item for item in formats if item not in allowed]
    if not formats or bad:
        raise ValueError(f"{command} writes {', '.join(allowed)}; got {text!r}")
    return formats


@dataclass
class CliConfig:
    """Validated command-line configuration."""
    command: str
    grid: GridSpec2D
    n_values: List[int] = field(default_factory=lambda: list(DEFAULT_N_VALUES))
    lambdas: List[float] = field(default_factory=lambda: list(DEFAULT_LAMBDAS))
    alphas: Tuple[int, ...] = DEFAULT_ALPHAS
    s: float = 1.0
    out: str = "."
    formats: Tuple[str, ...] = ()
    tolerances: Tolerances = field(default_factory=Tolerances)
    coupling: Coupling = Coupling.HAMILTONIAN
    kind: FieldKind = FieldKind.WIGNER
    source: Optional[str] = None
    a0: float = 0.0
    workers: int = 1

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> CliConfig:
        """Parses and validates everything before any numerical work starts."""
        command = args.command
        try:
            axis = GridSpec1D.from_string(args.grid)
        except GridError as exc:
            raise ValueError(f"--grid: {exc}") from None

        single = command in ("field", "survival")
        n_values = (parse_int_list(args.n) if getattr(args, "n", None) is not None
                    else [SINGLE_STATE_N] if single else list(DEFAULT_N_VALUES))
        if any(n < 0 for n in n_values):
            raise ValueError(f"--n values must be >= 0, got {n_values}")
        lambdas = (parse_lambdas(args.lam) if getattr(args, "lam", None) is not None
                   else [SINGLE_STATE_LAMBDA] if single else list(DEFAULT_LAMBDAS))
        if any(not math.isfinite(lam) or lam < 0 for lam in lambdas):
            raise ValueError(f"--lambda values must be finite and >= 0, got {lambdas}")
        if single and (len(n_values) != 1 or len(lambdas) != 1):
            raise ValueError(f"{command} takes exactly one --n and one --lambda")

        alphas = renyi_orders(parse_int_list(args.alpha)) if getattr(args, "alpha", None) else DEFAULT_ALPHAS
        s = float(getattr(args, "s", 1.0))
        if not (math.isfinite(s) and s > 0):
            raise ValueError(f"--s must be positive, got {s}")

        source = getattr(args, "source", None)
        if source is not None and not os.path.isfile(source):
            raise ValueError(f"input file {source!r} does not exist")

        formats = parse_formats(args.format, command)
        out = args.out
        if command == "render":
            if out == ".":
                out = f"{os.path.splitext(source)[0]}.{formats[0]}"
            if len(formats) != 1:
                raise ValueError("render writes a single image format")
        _check_writable(out, as_file=(command == "render"))

        return cls(
            command=command,
            grid=GridSpec2D.square(axis),
            n_values=n_values,
            lambdas=lambdas,
            alphas=tuple(alphas),
            s=s,
            out=out,
            formats=formats,
            tolerances=parse_tolerances(getattr(args, "tol", None)),
            coupling=Coupling(getattr(args, "coupling", Coupling.HAMILTONIAN.value)),
            kind=FieldKind(getattr(args, "kind", FieldKind.WIGNER.value)),
            source=source,
            a0=float(getattr(args, "a0", 0.0)),
            workers=worker_count(getattr(args, "workers", None)),
        )


def _check_writable(path: str, as_file: bool) -> None:
    directory = os.path.dirname(os.path.abspath(path)) if as_file else path
    try:
        os.makedirs(directory, exist_ok=True)
    except OSError as exc:
        raise ValueError(f"cannot create output directory {directory!r}: {exc.strerror}") from None
    if not os.access(directory, os.W_OK):
        raise ValueError(f"output directory {directory!r} is not writable")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="psinfo",
                            description="Phase-space information measures of oscillator states.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    def common(sub: ArgumentParser, states: bool = True) -> None:
        sub.add_argument("--grid", default="-8:8:513",
                         help="min:max:points for both axes; write --grid=-8:8:513")
        sub.add_argument("--out", default=".",
                         help="output directory; for render the image path (default: next to the CSV)")
        sub.add_argument("--format", default=None, help="comma list of output formats")
        sub.add_argument("--tol", action="append", metavar="NAME=VALUE",
                         help=f"override a tolerance ({', '.join(TOLERANCE_NAMES)})")
        sub.add_argument("--verbose", "-v", action="store_true")
        sub.add_argument("--quiet", "-q", action="store_true")
        if states:
            sub.add_argument("--n", default=None, help="comma list of quantum numbers")
            sub.add_argument("--lambda", dest="lam", default=None,
                             help="comma list or inclusive start:stop:step")
            sub.add_argument("--s", type=float, default=1.0, help="Husimi smoothing parameter")
            sub.add_argument("--coupling", choices=[c.value for c in Coupling],
                             default=Coupling.HAMILTONIAN.value)

    field_cmd = commands.add_parser("field", help="write a Wigner or Husimi field")
    common(field_cmd)
    field_cmd.add_argument("--kind", choices=[k.value for k in FieldKind], default=FieldKind.WIGNER.value)

    for name, text in (("sweep", "tabulate every measure over (n, lambda)"),
                       ("bounds", "check the uncertainty relations over (n, lambda)")):
        sub = commands.add_parser(name, help=text)
        common(sub)
        sub.add_argument("--alpha", default=None, help="comma list of even Renyi orders")
        sub.add_argument("--workers", type=int, default=None, help="worker threads (default $PSINFO_THREADS)")

    render_cmd = commands.add_parser("render", help="draw a heatmap from a field CSV")
    common(render_cmd, states=False)
    render_cmd.add_argument("source", help="field CSV written by `psinfo field`")

    survival_cmd = commands.add_parser("survival", help="write marginal and sliced survival curves")
    common(survival_cmd)
    survival_cmd.add_argument("--a0", type=float, default=0.0, help="position threshold of the 2D slice")
    return parser
