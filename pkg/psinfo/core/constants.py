# -*- coding: utf-8 -*-

# Default phase-space window: e^{-64} bounds the truncated Gaussian mass.
DEFAULT_EXTENT = 8.0
DEFAULT_POINTS = 513

# Densities below this are treated as zero inside logarithms.
DENSITY_FLOOR = 1e-14
# Floor for denominators of log-ratios.
RATIO_FLOOR = 1e-300

# Slack allowed for quantities that must be non-negative.
NEGATIVE_SLACK = 1e-10
NEGATIVE_ERROR = 1e-8

NORMALIZATION_TOLERANCE = 1e-6
