# Copyright (c) SI-Analytics. All rights reserved.
"""Exception hierarchy shared by the numerical modules and the CLI."""


class HgcError(Exception):
    """Base class of all errors raised by hgc.

    Attributes:
        exit_code (int): The process exit status the CLI reports when the
            error escapes a scenario.
    """
    exit_code: int = 1


class GroupLawError(HgcError, ValueError):
    """Malformed group law table or non-graded structure."""


class GridError(HgcError, ValueError):
    """Invalid grid geometry, sample shape or derivative order."""


class DivisionError(HgcError, ValueError):
    """Input fails the moment-free (or transform-side vanishing) check."""


class ConfigError(HgcError, ValueError):
    """Experiment config violates the scenario schema."""
    exit_code = 2


class DecayCertificateError(HgcError, ArithmeticError):
    """Addends of a regrouped dyadic sum fail to decay geometrically."""
    exit_code = 3


class ResourceGuardError(HgcError, MemoryError):
    """A dense object would exceed the configured size limit."""
    exit_code = 4
