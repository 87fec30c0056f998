"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class CombradiiError(Exception):
    """Base class for every error raised by this package."""


class DomainError(CombradiiError, ValueError):
    """A numeric parameter lies outside its legal range."""


class UsageError(CombradiiError, ValueError):
    """The call itself is malformed: unknown variant, unsupported mode pair,
    mixed function classes, and similar contract violations."""


class SingularityError(CombradiiError, ArithmeticError):
    """Evaluation was requested too close to a pole or boundary singularity.

    Carries the offending point in ``z``.
    """

    def __init__(self, z: complex, message: str):
        super().__init__(message)
        self.z = complex(z)


class CriticalPointError(CombradiiError, ArithmeticError):
    """The derivative of the combined function (numerically) vanishes at ``z``,
    which voids any conclusion drawn from ratios against it."""

    def __init__(self, z: complex, message: str):
        super().__init__(message)
        self.z = complex(z)


class PreconditionError(CombradiiError, ValueError):
    """An analytic precondition (e.g. disk membership of sampled values) fails."""


class RootIsolationError(CombradiiError, RuntimeError):
    """A downstream step needed an isolated root that was not found."""
