# -*- coding: utf-8 -*-
import math

# S_x + S_p >= 1 + ln(pi) for conjugate position/momentum densities.
SHANNON_BOUND = 1.0 + math.log(math.pi)
# Collision-entropy relation for alpha = beta = 2.
COLLISION_BOUND = math.log(2.0 * math.pi)
FISHER_BOUND = 4.0

BOUND_SLACK = 1e-9
CONJUGACY_TOLERANCE = 1e-12

# Points of P below this are outside its support for KL purposes.
KL_SUPPORT_FLOOR = 1e-12

MI_CONSISTENCY_TOLERANCE = 1e-4
