# -*- coding: utf-8 -*-

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARTIAL = 2
EXIT_INVARIANT = 3

FIELD_FILE_HEADER = "# psinfo field csv v"
SWEEP_FILE_HEADER = "# psinfo sweep csv v"
SURVIVAL_FILE_HEADER = "# psinfo survival csv v"
FILE_VERSION = 1
SUPPORTED_VERSIONS = (1,)

FORMATS = ("csv", "json", "svg", "ppm")
IMAGE_FORMATS = ("svg", "ppm")
COMMAND_FORMATS = {
    "field": ("csv", "svg", "ppm"),
    "sweep": ("csv", "json"),
    "bounds": ("json",),
    "render": ("svg", "ppm"),
    "survival": ("csv",),
}
DEFAULT_FORMATS = {
    "field": ("csv",),
    "sweep": ("csv", "json"),
    "bounds": ("json",),
    "render": ("svg",),
    "survival": ("csv",),
}

# Diverging map endpoints: negative, zero, positive.
NEGATIVE_COLOUR = (33, 102, 172)
ZERO_COLOUR = (247, 247, 247)
POSITIVE_COLOUR = (178, 24, 43)

FLOAT_FORMAT = ".17g"

# State used by `field` and `survival` when --n / --lambda are omitted.
SINGLE_STATE_N = 0
SINGLE_STATE_LAMBDA = 1e-4
