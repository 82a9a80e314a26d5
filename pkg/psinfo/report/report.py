# -*- coding: utf-8 -*-
"""Per-state measure reports and concurrent (n, lambda) sweeps."""
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from ..core.objects import GridSpec2D
from ..exceptions import InvariantViolation
from ..exceptions import PsInfoError
from ..measures.divergence import cauchy_schwarz_divergence
from ..measures.divergence import kl_divergence
from ..measures.divergence import mutual_information
from ..measures.divergence import renyi_divergence
from ..measures.divergence import renyi_mutual_information
from ..measures.entropy import check_fisher_bound
from ..measures.entropy import check_renyi_bound
from ..measures.entropy import check_shannon_bound
from ..measures.entropy import check_wehrl_floor
from ..measures.entropy import fisher_information
from ..measures.entropy import renyi_1d
from ..measures.entropy import renyi_phase_space
from ..measures.entropy import shannon_1d
from ..measures.entropy import wehrl_entropy
from ..measures.entropy import wigner_entropy
from ..measures.objects import BoundCheck
from ..measures.objects import DensityPair
from ..measures.survival import cross_cumulative_residual_entropy
from ..measures.survival import cumulative_residual_entropy
from ..measures.survival import jeffreys_divergence
from ..measures.survival import survival_1d
from ..oscillator.constants import Coupling
from ..oscillator.constants import Space
from ..oscillator.objects import OscillatorSpec
from ..oscillator.states import oscillator_state
from ..phasespace.phasespace import husimi_from_wigner
from ..phasespace.phasespace import marginals
from ..phasespace.phasespace import negativity
from ..phasespace.phasespace import wigner
from ..version import __version__
from .constants import BASE_MEASURES
from .constants import BOUND_ORDER
from .constants import DEFAULT_ALPHAS
from .constants import ORDER_MEASURES
from .constants import THREADS_ENV
from .objects import MeasureEntry
from .objects import MeasureReport
from .objects import SweepTable
from .objects import Tolerances

logger = logging.getLogger(__name__)


def renyi_orders(alphas: Iterable[int]) -> Tuple[int, ...]:
    """Sorted orders with the collision order always present."""
    orders = set()
    for alpha in alphas:
        if alpha != int(alpha) or int(alpha) < 2 or int(alpha) % 2:
            raise ValueError(f"Renyi orders must be even integers >= 2, got {alpha!r}")
        orders.add(int(alpha))
    orders.add(BOUND_ORDER)
    return tuple(sorted(orders))


def expected_measures(alphas: Iterable[int] = DEFAULT_ALPHAS) -> Tuple[str, ...]:
    """The full measure registry for the given Renyi orders."""
    names = list(BASE_MEASURES)
    for a in renyi_orders(alphas):
        names.extend(template.format(a=a) for template in ORDER_MEASURES)
    return tuple(names)


class _Collector:
    """Accumulates entries and names the measure when one fails."""

    def __init__(self) -> None:
        self.entries: Dict[str, MeasureEntry] = {}

    def measure(self, name: str, func: Callable, *args, **kwargs):
        try:
            value = func(*args, **kwargs)
        except (PsInfoError, ValueError) as exc:
            raise type(exc)(f"{name}: {exc}") from exc
        self.add(name, value)
        return value

    def add(self, name: str, value) -> None:
        if name in self.entries:
            raise ValueError(f"Measure {name!r} computed twice")
        value = complex(value)
        self.entries[name] = MeasureEntry(name, value.real, value.imag)

    def real(self, name: str) -> float:
        return self.entries[name].real


def compute_all(spec: OscillatorSpec, grid: Optional[GridSpec2D] = None, s: float = 1.0,
                alphas: Sequence[int] = DEFAULT_ALPHAS,
                coupling: Coupling = Coupling.HAMILTONIAN,
                tolerances: Optional[Tolerances] = None) -> MeasureReport:
    """Every registered measure and bound verdict for one state."""
    grid = grid if grid is not None else GridSpec2D.default()
    tolerances = tolerances if tolerances is not None else Tolerances()
    orders = renyi_orders(alphas)
    started = time.perf_counter()

    psi = oscillator_state(spec, Space.POSITION, grid.x, coupling)
    phi = oscillator_state(spec, Space.MOMENTUM, grid.p, coupling)
    w = wigner(psi, grid)
    h = husimi_from_wigner(w, s)
    marg_tol = tolerances.normalization
    wm = marginals(w, marg_tol)
    hm = marginals(h, marg_tol)

    out = _Collector()
    out.measure("S_x_W", shannon_1d, wm.rho_x)
    out.measure("S_p_W", shannon_1d, wm.rho_p)
    out.measure("S_x_H", shannon_1d, hm.rho_x)
    out.measure("S_p_H", shannon_1d, hm.rho_p)
    out.measure("S_x_psi", shannon_1d, psi.density())
    out.measure("S_p_psi", shannon_1d, phi.density())
    out.measure("S_W", lambda: complex(wigner_entropy(w)))
    out.measure("S_H", wehrl_entropy, h)

    for a in orders:
        out.measure(f"R{a}_W", renyi_phase_space, w, a)
        out.measure(f"R{a}_H", renyi_phase_space, h, a)
        out.measure(f"R{a}_x_W", renyi_1d, wm.rho_x, a)
        out.measure(f"R{a}_p_W", renyi_1d, wm.rho_p, a)
        out.measure(f"R{a}_x_H", renyi_1d, hm.rho_x, a)
        out.measure(f"R{a}_p_H", renyi_1d, hm.rho_p, a)

    out.measure("F_x", fisher_information, wm.rho_x)
    out.measure("F_p", fisher_information, wm.rho_p)

    survivals = {}
    for label, pair in (("W", wm), ("H", hm)):
        survivals[f"x_{label}"] = survival_1d(pair.rho_x)
        survivals[f"p_{label}"] = survival_1d(pair.rho_p)
        out.measure(f"C_x_{label}", cumulative_residual_entropy, survivals[f"x_{label}"])
        out.measure(f"C_p_{label}", cumulative_residual_entropy, survivals[f"p_{label}"])
    out.measure("CC_W", lambda: complex(cross_cumulative_residual_entropy(w, marginal_tolerance=marg_tol)))
    out.measure("CC_H", lambda: complex(cross_cumulative_residual_entropy(h, marginal_tolerance=marg_tol)))

    for label, field in (("W", w), ("H", h)):
        out.measure(f"I_{label}", lambda f=field: complex(mutual_information(
            f, tolerances.mi_consistency, marg_tol).direct))
        out.measure(f"I2_{label}", renyi_mutual_information, field, marg_tol)

    x_pair = DensityPair(wm.rho_x, hm.rho_x)
    p_pair = DensityPair(wm.rho_p, hm.rho_p)
    out.measure("KL_x", kl_divergence, x_pair)
    out.measure("KL_p", kl_divergence, p_pair)
    out.measure("J_x", jeffreys_divergence, survivals["x_W"], survivals["x_H"])
    out.measure("J_p", jeffreys_divergence, survivals["p_W"], survivals["p_H"])
    for a in orders:
        out.measure(f"D_R{a}_x", renyi_divergence, x_pair, a)
        out.measure(f"D_R{a}_p", renyi_divergence, p_pair, a)
    out.measure("D_CS", cauchy_schwarz_divergence, w.as_sampled(), h.as_sampled())
    out.measure("N_W", lambda: negativity(w)[1])

    bounds = _bounds(out)
    _check_complete(out.entries, orders)
    logger.debug("Computed %d measures for %s in %.2fs",
                 len(out.entries), spec, time.perf_counter() - started)
    return MeasureReport(spec, grid, list(out.entries.values()), bounds)


def _bounds(out: _Collector) -> List[BoundCheck]:
    checks = []
    for label in ("W", "H", "psi"):
        inputs = (f"S_x_{label}", f"S_p_{label}")
        checks.append(check_shannon_bound(out.real(inputs[0]), out.real(inputs[1]),
                                          f"shannon_{label}", inputs))
    for label in ("W", "H"):
        inputs = (f"R{BOUND_ORDER}_x_{label}", f"R{BOUND_ORDER}_p_{label}")
        checks.append(check_renyi_bound(out.real(inputs[0]), out.real(inputs[1]),
                                        BOUND_ORDER, BOUND_ORDER, f"renyi_{label}", inputs))
    checks.append(check_fisher_bound(out.real("F_x"), out.real("F_p"), "fisher", ("F_x", "F_p")))
    checks.append(check_wehrl_floor(out.real("S_H"), "wehrl", ("S_H",)))
    return checks


def _check_complete(entries: Dict[str, MeasureEntry], orders: Sequence[int]) -> None:
    expected = set(expected_measures(orders))
    missing = expected - set(entries)
    extra = set(entries) - expected
    if missing or extra:
        raise InvariantViolation(
            f"Measure registry mismatch: missing {sorted(missing)}, unregistered {sorted(extra)}")


def worker_count(requested: Optional[int] = None) -> int:
    """Worker pool size: explicit request, else $PSINFO_THREADS, else the CPU count."""
    if requested is None:
        env = os.environ.get(THREADS_ENV)
        if env:
            try:
                requested = int(env)
            except ValueError:
                raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    if requested is None:
        return os.cpu_count() or 1
    if requested < 1:
        raise ValueError(f"Worker count must be >= 1, got {requested}")
    return requested


def _sweep_row(spec: OscillatorSpec, grid: GridSpec2D, kwargs) -> MeasureReport:
    try:
        return compute_all(spec, grid, **kwargs)
    except (PsInfoError, ValueError, ArithmeticError) as exc:
        logger.warning("Row %s failed: %s", spec, exc)
        return MeasureReport(spec, grid, error=str(exc), error_type=type(exc).__name__)


def sweep(n_values: Sequence[int], lambda_values: Sequence[float],
          grid: Optional[GridSpec2D] = None, s: float = 1.0,
          alphas: Sequence[int] = DEFAULT_ALPHAS,
          coupling: Coupling = Coupling.HAMILTONIAN,
          tolerances: Optional[Tolerances] = None,
          workers: Optional[int] = None) -> SweepTable:
    """compute_all over every (n, lambda) pair; failed rows are kept with their error."""
    if not n_values:
        raise ValueError("Sweep needs at least one quantum number")
    if not lambda_values:
        raise ValueError("Sweep needs at least one lambda value")
    grid = grid if grid is not None else GridSpec2D.default()
    tolerances = tolerances if tolerances is not None else Tolerances()
    orders = renyi_orders(alphas)

    specs = [OscillatorSpec(int(n), float(lam)) for n in n_values for lam in lambda_values]
    keys = [spec.key for spec in specs]
    duplicates = sorted({key for key in keys if keys.count(key) > 1})
    if duplicates:
        raise ValueError(f"Duplicate sweep keys: {duplicates}")

    pool_size = min(worker_count(workers), len(specs))
    kwargs = dict(s=s, alphas=orders, coupling=coupling, tolerances=tolerances)
    logger.info("Sweeping %d states on a %dx%d grid with %d workers",
                len(specs), grid.x.points, grid.p.points, pool_size)
    started = time.perf_counter()
    with ThreadPoolExecutor(max_workers=pool_size) as pool:
        rows = list(pool.map(lambda spec: _sweep_row(spec, grid, kwargs), specs))
    rows.sort(key=lambda row: row.key)

    failed = sum(row.failed for row in rows)
    logger.info("Sweep finished in %.1fs, %d of %d rows failed",
                time.perf_counter() - started, failed, len(rows))
    metadata = {
        "grid_x": str(grid.x),
        "grid_p": str(grid.p),
        "s": s,
        "alphas": list(orders),
        "coupling": Coupling(coupling).value,
        "tolerances": tolerances.as_dict(),
    }
    return SweepTable(rows, metadata, f"psinfo {__version__}")
