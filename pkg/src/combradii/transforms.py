"""The positivity quantities whose real parts define the radii.

Four quantities are evaluated from the jet of a function F:

* ``log_deriv_ratio``        z F''(z) / F'(z)
* ``convexity_operator``     1 + z F''/F'        (positive real part <=> convex image)
* ``concavity_operator``     (2/(A-1)) ((A+1)/2 * (1+z)/(1-z) - 1 - z F''/F')
* ``pole_concavity_operator``  -(1 + z F''/F' + (z+p)/(z-p) - (1+pz)/(1-pz))

The last two are the membership kernels of the concave families: a function
belongs exactly when the real part stays positive on the disk.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CriticalPointError, DomainError, SingularityError, UsageError
from .functions import AnalyticFn, CombinationSpec, eval_jet

# |F'(z)| at or below this voids every ratio against it.
CRITICAL_GUARD = 1e-12
# Absolute exclusion distance around the structural singular points p and 1.
PARAM_GUARD = 1e-6


@dataclass(frozen=True)
class TransformKind:
    """Selector for one of the four quantities, with its class parameter."""

    name: str
    param: float | None = None

    LOG_DERIV_RATIO = "log_deriv_ratio"
    CONVEXITY = "convexity"
    CONCAVITY = "concavity"
    POLE_CONCAVITY = "pole_concavity"

    def __post_init__(self):
        if self.name in (self.LOG_DERIV_RATIO, self.CONVEXITY):
            if self.param is not None:
                raise UsageError(f"{self.name} takes no parameter")
        elif self.name == self.CONCAVITY:
            if self.param is None or not 1.0 < self.param <= 2.0:
                raise DomainError(f"concavity parameter must lie in (1,2], got {self.param}")
        elif self.name == self.POLE_CONCAVITY:
            if self.param is None or not 0.0 < self.param < 1.0:
                raise DomainError(f"pole parameter must lie in (0,1), got {self.param}")
        else:
            raise UsageError(f"unknown transform kind {self.name!r}")

    @classmethod
    def log_deriv_ratio(cls) -> "TransformKind":
        return cls(cls.LOG_DERIV_RATIO)

    @classmethod
    def convexity(cls) -> "TransformKind":
        return cls(cls.CONVEXITY)

    @classmethod
    def concavity(cls, A: float) -> "TransformKind":
        return cls(cls.CONCAVITY, float(A))

    @classmethod
    def pole_concavity(cls, p: float) -> "TransformKind":
        return cls(cls.POLE_CONCAVITY, float(p))


def _guarded_jet(F: AnalyticFn, z):
    v, d1, d2 = eval_jet(F, z)
    small = np.abs(np.asarray(d1)) <= CRITICAL_GUARD
    if np.any(small):
        za = np.asarray(z, dtype=complex)
        offender = za[small].flat[0] if za.shape else complex(za)
        raise CriticalPointError(complex(offender), f"|F'({offender})| <= {CRITICAL_GUARD:g}")
    return v, d1, d2


def log_deriv_ratio(F: AnalyticFn, z):
    """z F''(z)/F'(z) by the direct quotient of the jet."""
    _, d1, d2 = _guarded_jet(F, z)
    return z * d2 / d1


def log_deriv_ratio_decomposed(spec: CombinationSpec, z: complex) -> complex:
    """The same ratio assembled term by term from the components.

    Each component contributes its own ratio z f_t''/f_t' scaled by the
    reciprocal of sum_s (lambda_s f_s')/(lambda_t f_t').  Algebraically equal
    to the direct quotient; numerically an independent evaluation path used as
    a diagnostic.
    """
    lams = spec.lambdas()
    jets = [fn.jet(np.asarray(z, dtype=complex)) for fn in spec.functions]
    total = 0.0 + 0.0j
    for t, (lam_t, jet_t) in enumerate(zip(lams, jets)):
        _, f1_t, f2_t = jet_t
        denom = 0.0 + 0.0j
        for lam_s, (_, f1_s, _) in zip(lams, jets):
            denom += (lam_s * f1_s) / (lam_t * f1_t)
        total += (z * f2_t / f1_t) / denom
    return complex(total)


def decomposition_discrepancy(spec: CombinationSpec, z: complex) -> float:
    """|direct quotient - componentwise assembly| at z."""
    from .functions import combine

    direct = log_deriv_ratio(combine(spec), z)
    return abs(complex(direct) - log_deriv_ratio_decomposed(spec, z))


def convexity_operator(F: AnalyticFn, z):
    """1 + z F''/F'; positive real part on |z|<r means F maps the subdisk convexly."""
    return 1.0 + log_deriv_ratio(F, z)


def concavity_operator(F: AnalyticFn, z, A: float):
    """Membership kernel of the concave family with parameter A in (1,2]."""
    if not 1.0 < A <= 2.0:
        raise DomainError(f"concavity parameter must lie in (1,2], got {A}")
    za = np.asarray(z, dtype=complex)
    near_one = np.abs(za - 1.0) < PARAM_GUARD
    if np.any(near_one):
        offender = za[near_one].flat[0] if za.shape else complex(za)
        raise SingularityError(complex(offender), f"z={offender} is within {PARAM_GUARD:g} of 1")
    ratio = log_deriv_ratio(F, z)
    return (2.0 / (A - 1.0)) * ((A + 1.0) / 2.0 * (1.0 + z) / (1.0 - z) - 1.0 - ratio)


def pole_concavity_operator(F: AnalyticFn, z, p: float):
    """Membership kernel of the concave family with a simple pole at p in (0,1)."""
    if not 0.0 < p < 1.0:
        raise DomainError(f"pole parameter must lie in (0,1), got {p}")
    za = np.asarray(z, dtype=complex)
    near_p = np.abs(za - p) < PARAM_GUARD
    if np.any(near_p):
        offender = za[near_p].flat[0] if za.shape else complex(za)
        raise SingularityError(complex(offender), f"z={offender} is within {PARAM_GUARD:g} of the pole at {p}")
    ratio = log_deriv_ratio(F, z)
    return -(1.0 + ratio + (z + p) / (z - p) - (1.0 + p * z) / (1.0 - p * z))


def pole_concavity_limit(F: AnalyticFn, p: float, h0: float = 1e-3, levels: int = 6) -> complex:
    """Probe the kernel's limit as z -> p along the real axis.

    The kernel has a removable singularity at the pole; this extrapolates the
    values at z = p - h0/2^k (all outside the exclusion guard) to h = 0 by a
    polynomial fit.  Offered as a diagnostic only; nothing asserts the limit
    for specific fixtures.
    """
    hs = np.array([h0 / 2.0**k for k in range(levels)])
    if hs[-1] <= PARAM_GUARD:
        raise DomainError("probe offsets must stay outside the pole exclusion guard")
    vals = np.array([complex(pole_concavity_operator(F, p - h, p)) for h in hs])
    deg = levels - 1
    re = np.polynomial.polynomial.polyfit(hs, vals.real, deg)[0]
    im = np.polynomial.polynomial.polyfit(hs, vals.imag, deg)[0]
    return complex(re, im)


def evaluate(kind: TransformKind, F: AnalyticFn, z):
    """Dispatch a TransformKind to its evaluator."""
    if kind.name == TransformKind.LOG_DERIV_RATIO:
        return log_deriv_ratio(F, z)
    if kind.name == TransformKind.CONVEXITY:
        return convexity_operator(F, z)
    if kind.name == TransformKind.CONCAVITY:
        return concavity_operator(F, z, kind.param)
    return pole_concavity_operator(F, z, kind.param)
