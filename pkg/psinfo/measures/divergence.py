# -*- coding: utf-8 -*-
"""Divergences between densities and position/momentum mutual information."""
import logging
import math

import numpy as np

from ..core.constants import DENSITY_FLOOR
from ..core.constants import NEGATIVE_ERROR
from ..core.constants import RATIO_FLOOR
from ..core.objects import SampledField1D
from ..core.objects import SampledField2D
from ..core.quadrature import integrate_1d
from ..core.quadrature import integrate_2d
from ..exceptions import InvariantViolation
from ..phasespace.constants import MARGINAL_TOLERANCE
from ..phasespace.objects import FieldKind
from ..phasespace.objects import PhaseSpaceField
from ..phasespace.phasespace import marginals
from .constants import KL_SUPPORT_FLOOR
from .constants import MI_CONSISTENCY_TOLERANCE
from .entropy import principal_log
from .entropy import shannon_1d
from .entropy import wehrl_entropy
from .entropy import wigner_entropy
from .objects import ComplexEntropy
from .objects import DensityPair
from .objects import MutualInformationResult

logger = logging.getLogger(__name__)


def _pair_values(pair: DensityPair):
    for name, rho in (("P", pair.p), ("Q", pair.q)):
        lowest = float(rho.values.min())
        if lowest < -NEGATIVE_ERROR:
            raise ValueError(f"{name} dips to {lowest:.3e}; not a probability density")
    p = np.clip(pair.p.values, 0.0, None)
    support = p > KL_SUPPORT_FLOOR
    if not np.any(pair.q.values[support] > 0):
        raise ValueError("Q vanishes on the whole support of P; the divergence is undefined")
    q = np.clip(pair.q.values, RATIO_FLOOR, None)
    return p, q


def kl_divergence(pair: DensityPair) -> float:
    """int P ln(P / Q)."""
    p, q = _pair_values(pair)
    support = p > KL_SUPPORT_FLOOR
    integrand = np.zeros_like(p)
    integrand[support] = p[support] * (np.log(p[support]) - np.log(q[support]))
    return integrate_1d(SampledField1D(pair.p.grid, integrand)).real


def renyi_divergence(pair: DensityPair, alpha: float) -> float:
    """(alpha - 1)^{-1} ln int P^alpha Q^{1 - alpha}."""
    alpha = float(alpha)
    if not alpha > 0 or alpha == 1.0:
        raise ValueError(f"Renyi divergence order must be positive and != 1, got {alpha}")
    p, q = _pair_values(pair)
    # Round-off tails of P over a clipped Q would overflow the power.
    support = p > KL_SUPPORT_FLOOR
    log_ratio = np.zeros_like(p)
    log_ratio[support] = np.log(p[support]) - np.log(q[support])
    # P^alpha Q^{1-alpha} - P, integrated separately from the normalization drift.
    excess = np.where(support, p * np.expm1((alpha - 1.0) * log_ratio), 0.0)
    grid = pair.p.grid
    drift = integrate_1d(SampledField1D(grid, p)).real - 1.0
    surplus = drift + integrate_1d(SampledField1D(grid, excess)).real
    return float(np.log1p(surplus) / (alpha - 1.0))


def _field_log(field: PhaseSpaceField) -> np.ndarray:
    if field.kind is FieldKind.WIGNER:
        return principal_log(field.values)
    return principal_log(np.clip(field.values, 0.0, None)).real.astype(np.complex128)


def mutual_information(field: PhaseSpaceField,
                       tolerance: float = MI_CONSISTENCY_TOLERANCE,
                       marginal_tolerance: float = MARGINAL_TOLERANCE) -> MutualInformationResult:
    """I = int int F ln(F / (rho_x rho_p)), cross-checked against S_x + S_p - S_F."""
    grid = field.grid
    pair = marginals(field, marginal_tolerance)

    log_x = np.log(np.maximum(pair.rho_x.values, RATIO_FLOOR))
    log_p = np.log(np.maximum(pair.rho_p.values, RATIO_FLOOR))
    keep = np.abs(field.values) >= DENSITY_FLOOR
    integrand = np.where(keep, field.values * (_field_log(field) - log_x[:, None] - log_p[None, :]), 0.0)
    direct = ComplexEntropy.from_complex(integrate_2d(SampledField2D(grid, integrand, real=False)))

    if field.kind is FieldKind.WIGNER:
        joint = wigner_entropy(field)
    else:
        joint = ComplexEntropy(wehrl_entropy(field))
    entropic = ComplexEntropy(shannon_1d(pair.rho_x) + shannon_1d(pair.rho_p)) - joint
    if field.kind is FieldKind.HUSIMI:
        direct = ComplexEntropy(direct.real_part)
        entropic = ComplexEntropy(entropic.real_part)

    result = MutualInformationResult(direct, entropic, field.kind)
    if result.discrepancy > tolerance:
        raise InvariantViolation(
            f"{field.kind.value} mutual information of {field.label!r}: direct {complex(direct)} "
            f"and entropic {complex(entropic)} differ by {result.discrepancy:.3e}")
    return result


def renyi_mutual_information(field: PhaseSpaceField,
                             marginal_tolerance: float = MARGINAL_TOLERANCE) -> float:
    """ln int int F^2 / (rho_x rho_p).

    Infinite when a marginal has a node on which the field itself does not
    vanish (the Wigner field of an odd state on the line x = 0).
    """
    pair = marginals(field, marginal_tolerance)
    product = np.outer(pair.rho_x.values, pair.rho_p.values)
    square = field.values ** 2
    keep = square >= DENSITY_FLOOR
    if np.any(keep & (product < DENSITY_FLOOR)):
        logger.warning("Renyi mutual information of %r diverges at a marginal node", field.label)
        return math.inf
    integrand = np.zeros_like(square)
    integrand[keep] = square[keep] / np.maximum(product[keep], RATIO_FLOOR)
    return float(np.log(integrate_2d(SampledField2D(field.grid, integrand)).real))


def cauchy_schwarz_divergence(f1: SampledField2D, f2: SampledField2D) -> float:
    """-ln[(int f1 f2)^2 / (int f1^2 int f2^2)]."""
    if f1.grid != f2.grid:
        raise ValueError("Fields must share a grid")
    grid = f1.grid
    norm1 = integrate_2d(SampledField2D(grid, f1.values ** 2)).real
    norm2 = integrate_2d(SampledField2D(grid, f2.values ** 2)).real
    if norm1 <= 0 or norm2 <= 0:
        raise ValueError("Cauchy-Schwarz divergence needs two non-zero fields")
    overlap = abs(integrate_2d(SampledField2D(grid, f1.values * f2.values)).real)
    if overlap == 0:
        return math.inf
    return float(-2.0 * math.log(overlap) + math.log(norm1) + math.log(norm2))
