# -*- coding: utf-8 -*-


class PsInfoError(Exception):
    """Base class for every error raised by psinfo."""


class GridError(PsInfoError, ValueError):
    """A grid is malformed or a sampled field holds non-finite values."""


class InvariantViolation(PsInfoError, ValueError):
    """A numerical invariant of a computed quantity does not hold."""


class PerturbativeRegimeWarning(UserWarning):
    """The quartic coupling is outside the first-order perturbative regime."""
