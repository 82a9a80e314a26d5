# -*- coding: utf-8 -*-
"""Survival functions, cumulative residual entropies and Jeffreys divergence."""
import logging

import numpy as np

from ..core.constants import DENSITY_FLOOR
from ..core.constants import RATIO_FLOOR
from ..core.objects import SampledField1D
from ..core.objects import SampledField2D
from ..core.quadrature import integrate_1d
from ..core.quadrature import integrate_2d
from ..core.quadrature import suffix_integral
from ..phasespace.constants import MARGINAL_TOLERANCE
from ..phasespace.objects import FieldKind
from ..phasespace.objects import PhaseSpaceField
from ..phasespace.phasespace import marginals
from .entropy import principal_log
from .objects import ComplexEntropy
from .objects import SurvivalField1D
from .objects import SurvivalField2D

logger = logging.getLogger(__name__)

CONDITIONED_ON = ("momentum", "position")


def survival_1d(rho: SampledField1D) -> SurvivalField1D:
    """s(a) = int_a^max rho at every grid threshold."""
    return SurvivalField1D(rho.grid, suffix_integral(rho.values, rho.grid))


def survival_2d(field: PhaseSpaceField) -> SurvivalField2D:
    """s(a, b) = int_a^max int_b^max field. Wigner survivals keep their negative parts."""
    grid = field.grid
    inner = suffix_integral(field.values, grid.p, axis=1)
    return SurvivalField2D(grid, suffix_integral(inner, grid.x, axis=0), field.kind)


def cumulative_residual_entropy(s: SurvivalField1D) -> float:
    """C = -int s ln s over the thresholds, s clamped to [0, 1]."""
    v = np.clip(s.values, 0.0, 1.0)
    keep = v >= DENSITY_FLOOR
    integrand = np.zeros_like(v)
    integrand[keep] = -v[keep] * np.log(v[keep])
    return integrate_1d(SampledField1D(s.grid, integrand)).real


def cross_cumulative_residual_entropy(field: PhaseSpaceField,
                                      conditioned: str = "momentum",
                                      marginal_tolerance: float = MARGINAL_TOLERANCE) -> ComplexEntropy:
    """C_p - eps with eps = -int int S(x, b) ln(S(x, b) / rho_x(x)) dx db.

    S(x, b) is the momentum survival at fixed x. With conditioned="position"
    the roles of x and p swap, giving C_x - eps'. Both vanish for product fields.
    """
    if conditioned not in CONDITIONED_ON:
        raise ValueError(f"conditioned must be one of {CONDITIONED_ON}, got {conditioned!r}")
    grid = field.grid
    pair = marginals(field, marginal_tolerance)

    if conditioned == "momentum":
        partial = suffix_integral(field.values, grid.p, axis=1)
        given = np.maximum(pair.rho_x.values, DENSITY_FLOOR)[:, None]
        base = cumulative_residual_entropy(survival_1d(pair.rho_p))
    else:
        partial = suffix_integral(field.values, grid.x, axis=0)
        given = np.maximum(pair.rho_p.values, DENSITY_FLOOR)[None, :]
        base = cumulative_residual_entropy(survival_1d(pair.rho_x))

    if field.kind is FieldKind.HUSIMI:
        partial = np.clip(partial, 0.0, None)
    ratio = partial / given
    log_ratio = principal_log(ratio)
    log_ratio[np.abs(partial) < DENSITY_FLOOR] = 0.0
    correction = -integrate_2d(SampledField2D(grid, partial * log_ratio, real=False))

    result = ComplexEntropy.from_complex(base - correction)
    if field.kind is FieldKind.HUSIMI:
        return ComplexEntropy(result.real_part, 0.0)
    return result


def jeffreys_divergence(sW: SurvivalField1D, sH: SurvivalField1D) -> float:
    """int (sW - sH)(ln sW - ln sH), i.e. sW ln(sW/sH) + sH ln(sH/sW)."""
    if sW.grid != sH.grid:
        raise ValueError("Survival functions must share a grid")
    a = np.clip(sW.values, RATIO_FLOOR, 1.0)
    b = np.clip(sH.values, RATIO_FLOOR, 1.0)
    integrand = (a - b) * (np.log(a) - np.log(b))
    return integrate_1d(SampledField1D(sW.grid, integrand)).real
