# -*- coding: utf-8 -*-
from enum import Enum


class Space(str, Enum):
    POSITION = "position"
    MOMENTUM = "momentum"


class Coupling(str, Enum):
    # (lambda / 4) x^4 for every state.
    HAMILTONIAN = "hamiltonian"
    # Ground-state polynomials exactly as printed (four times the first-order
    # correction of the stated Hamiltonian); n = 1 is unaffected.
    PRINTED = "printed"


PERTURBATIVE_LIMIT = 0.5

# Extra ladder levels kept above n + 4 when building the x^4 matrix.
QUARTIC_PADDING = 2
