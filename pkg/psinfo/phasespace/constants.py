# -*- coding: utf-8 -*-

# Imaginary residue of the Wigner transform: dropped silently below the
# slack, logged up to the error threshold, fatal above it.
IMAGINARY_SLACK = 1e-10
IMAGINARY_ERROR = 1e-8

MARGINAL_TOLERANCE = 1e-5
