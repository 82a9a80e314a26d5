# -*- coding: utf-8 -*-

DEFAULT_ALPHAS = (2, 4)
DEFAULT_N_VALUES = (0, 1)
# 0, 0.05, ..., 0.3
DEFAULT_LAMBDAS = tuple(round(0.05 * k, 10) for k in range(7))

THREADS_ENV = "PSINFO_THREADS"

# Measures computed once per state.
BASE_MEASURES = (
    "S_x_W", "S_p_W", "S_x_H", "S_p_H", "S_x_psi", "S_p_psi",
    "S_W", "S_H",
    "F_x", "F_p",
    "C_x_W", "C_p_W", "C_x_H", "C_p_H",
    "CC_W", "CC_H",
    "I_W", "I_H",
    "I2_W", "I2_H",
    "KL_x", "KL_p",
    "J_x", "J_p",
    "D_CS",
    "N_W",
)

# Measures computed once per Renyi order; `{a}` is the order.
ORDER_MEASURES = (
    "R{a}_W", "R{a}_H",
    "R{a}_x_W", "R{a}_p_W", "R{a}_x_H", "R{a}_p_H",
    "D_R{a}_x", "D_R{a}_p",
)

# Marginal Renyi-2 entries feed the collision-entropy bound.
BOUND_ORDER = 2

# Serialized as <name>_re / <name>_im columns.
COMPLEX_MEASURES = ("S_W", "CC_W", "CC_H", "I_W", "I_H")
