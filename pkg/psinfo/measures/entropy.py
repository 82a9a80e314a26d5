# -*- coding: utf-8 -*-
"""Shannon, Wehrl, Renyi and Fisher measures plus uncertainty-bound checks."""
import logging
import math

import numpy as np

from ..core.constants import DENSITY_FLOOR
from ..core.constants import NEGATIVE_ERROR
from ..core.objects import SampledField1D
from ..core.objects import SampledField2D
from ..core.quadrature import integrate_1d
from ..core.quadrature import integrate_2d
from ..exceptions import InvariantViolation
from ..phasespace.objects import FieldKind
from ..phasespace.objects import PhaseSpaceField
from .constants import COLLISION_BOUND
from .constants import CONJUGACY_TOLERANCE
from .constants import FISHER_BOUND
from .constants import SHANNON_BOUND
from .objects import BoundCheck
from .objects import ComplexEntropy

logger = logging.getLogger(__name__)


def principal_log(values: np.ndarray) -> np.ndarray:
    """ln|w| + i pi for w < 0; entries with |w| below the density floor map to 0."""
    values = np.asarray(values, dtype=np.float64)
    keep = np.abs(values) >= DENSITY_FLOOR
    out = np.zeros(values.shape, dtype=np.complex128)
    out[keep] = np.log(np.abs(values[keep])) + 1j * np.pi * (values[keep] < 0)
    return out


def _clamped_density(values: np.ndarray, what: str) -> np.ndarray:
    lowest = float(values.min())
    if lowest < -NEGATIVE_ERROR:
        raise ValueError(f"{what} dips to {lowest:.3e}; not a probability density")
    return np.clip(values, 0.0, None)


def _neg_x_log_x(values: np.ndarray) -> np.ndarray:
    keep = values >= DENSITY_FLOOR
    out = np.zeros_like(values)
    out[keep] = -values[keep] * np.log(values[keep])
    return out


def shannon_1d(rho: SampledField1D) -> float:
    """-int rho ln rho with 0 ln 0 = 0."""
    v = _clamped_density(rho.values, "density")
    return integrate_1d(SampledField1D(rho.grid, _neg_x_log_x(v))).real


def wigner_entropy(w: PhaseSpaceField) -> ComplexEntropy:
    """-int int W ln W on the principal branch; complex wherever W < 0."""
    if w.kind is not FieldKind.WIGNER:
        raise ValueError(f"wigner_entropy expects a Wigner field, got {w.kind.value}")
    integrand = -w.values * principal_log(w.values)
    return ComplexEntropy.from_complex(integrate_2d(SampledField2D(w.grid, integrand, real=False)))


def wehrl_entropy(h: PhaseSpaceField) -> float:
    """-int int H ln H."""
    if h.kind is not FieldKind.HUSIMI:
        raise ValueError(f"wehrl_entropy expects a Husimi field, got {h.kind.value}")
    lowest = float(h.values.min())
    if lowest < -NEGATIVE_ERROR:
        raise InvariantViolation(f"Husimi field {h.label!r} dips to {lowest:.3e}")
    v = np.clip(h.values, 0.0, None)
    return integrate_2d(SampledField2D(h.grid, _neg_x_log_x(v))).real


def _check_order(alpha: float) -> float:
    alpha = float(alpha)
    if not alpha > 0:
        raise ValueError(f"Renyi order must be positive, got {alpha}")
    if alpha == 1.0:
        raise ValueError("Renyi order 1 is the Shannon limit; use shannon_1d")
    return alpha


def renyi_1d(rho: SampledField1D, alpha: float) -> float:
    """(1 - alpha)^{-1} ln int rho^alpha.

    Evaluated as log1p of (int rho^alpha - 1) so that orders close to 1 keep
    their precision.
    """
    alpha = _check_order(alpha)
    v = _clamped_density(rho.values, "density")
    positive = v > 0
    log_v = np.zeros_like(v)
    log_v[positive] = np.log(v[positive])
    excess = np.where(positive, v * np.expm1((alpha - 1.0) * log_v), 0.0)
    drift = integrate_1d(SampledField1D(rho.grid, v)).real - 1.0
    surplus = drift + integrate_1d(SampledField1D(rho.grid, excess)).real
    return float(np.log1p(surplus) / (1.0 - alpha))


def renyi_phase_space(field: PhaseSpaceField, alpha: int) -> float:
    """(1 - alpha)^{-1} ln int int field^alpha; Wigner fields need an even order."""
    alpha = _check_order(alpha)
    if field.kind is FieldKind.WIGNER:
        if alpha != int(alpha) or int(alpha) % 2:
            raise ValueError(f"Wigner Renyi entropy needs an even integer order, got {alpha}")
        values = field.values ** int(alpha)
    else:
        values = np.clip(field.values, 0.0, None) ** alpha
    total = integrate_2d(SampledField2D(field.grid, values)).real
    return float(np.log(total) / (1.0 - alpha))


def _first_derivative(v: np.ndarray, h: float) -> np.ndarray:
    # Fourth-order centred interior, numpy's second-order closure at the ends.
    d = np.gradient(v, h, edge_order=2)
    d[2:-2] = (-v[4:] + 8.0 * v[3:-1] - 8.0 * v[1:-3] + v[:-4]) / (12.0 * h)
    return d


def _second_derivative(v: np.ndarray, h: float) -> np.ndarray:
    d = np.zeros_like(v)
    d[1:-1] = (v[2:] - 2.0 * v[1:-1] + v[:-2]) / (h * h)
    d[2:-2] = (-v[4:] + 16.0 * v[3:-1] - 30.0 * v[2:-2] + 16.0 * v[1:-3] - v[:-4]) / (12.0 * h * h)
    return d


def fisher_information(rho: SampledField1D) -> float:
    """int (rho')^2 / rho by finite differences.

    Below the density floor the integrand takes its double-zero limit 2 rho'',
    so nodes of |psi|^2 contribute their true weight.
    """
    v = _clamped_density(rho.values, "density")
    h = rho.grid.spacing
    slope = _first_derivative(v, h)
    ok = v >= DENSITY_FLOOR
    integrand = np.zeros_like(v)
    integrand[ok] = slope[ok] ** 2 / v[ok]
    curvature = _second_derivative(v, h)
    integrand[~ok] = 2.0 * np.clip(curvature[~ok], 0.0, None)
    return integrate_1d(SampledField1D(rho.grid, integrand)).real


def fisher_information_discrete(probabilities) -> float:
    """sum_i (1 / p_i) (dp_i / di)^2 over the support of a probability vector."""
    p = np.asarray(probabilities, dtype=np.float64)
    if p.ndim != 1 or p.size < 2:
        raise ValueError("Need a one-dimensional probability vector with at least two entries")
    if np.any(p < 0):
        raise ValueError("Probabilities must be non-negative")
    slope = np.gradient(p)
    support = p > 0
    return float(np.sum(slope[support] ** 2 / p[support]))


def check_shannon_bound(sx: float, sp: float, name: str = "shannon",
                        inputs=()) -> BoundCheck:
    """S_x + S_p >= 1 + ln pi."""
    return BoundCheck.evaluate(sx + sp, SHANNON_BOUND, name, inputs)


def renyi_bound(alpha: float, beta: float) -> float:
    """Right-hand side of the Renyi position/momentum uncertainty relation."""
    alpha, beta = float(alpha), float(beta)
    if alpha == beta == 2.0:
        return COLLISION_BOUND
    if alpha == beta == 1.0:
        return SHANNON_BOUND
    if alpha <= 0 or beta <= 0:
        raise ValueError(f"Renyi orders must be positive, got ({alpha}, {beta})")
    if abs(1.0 / alpha + 1.0 / beta - 2.0) > CONJUGACY_TOLERANCE:
        raise ValueError(f"Orders ({alpha}, {beta}) violate 1/alpha + 1/beta = 2")
    return (-math.log(beta / math.pi) / (2.0 * (1.0 - beta))
            - math.log(alpha / math.pi) / (2.0 * (1.0 - alpha)))


def check_renyi_bound(rx: float, rp: float, alpha: float, beta: float,
                      name: str = "renyi", inputs=()) -> BoundCheck:
    """R_alpha(x) + R_beta(p) >= rhs(alpha, beta)."""
    return BoundCheck.evaluate(rx + rp, renyi_bound(alpha, beta), name, inputs)


def check_fisher_bound(fx: float, fp: float, name: str = "fisher", inputs=()) -> BoundCheck:
    """F_x F_p >= 4."""
    return BoundCheck.evaluate(fx * fp, FISHER_BOUND, name, inputs)


def check_wehrl_floor(s_h: float, name: str = "wehrl", inputs=()) -> BoundCheck:
    return BoundCheck.evaluate(s_h, SHANNON_BOUND, name, inputs)
