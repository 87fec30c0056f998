"""Test functions on the unit disk, their jets, and weighted combinations.

Every function is represented by a jet evaluator ``z -> (f(z), f'(z), f''(z))``
built from closed-form derivatives, normalized so that f(0) = 0 and f'(0) = 1.
Jets accept either a complex scalar or a numpy array of points.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, SingularityError, UsageError

# Evaluation is capped at |z| <= 1 - DISK_EDGE_GUARD and kept at least
# POLE_GUARD away from any pole; both guards leave >= 6 significant digits
# in double precision next to the excluded point.
DISK_EDGE_GUARD = 1e-9
POLE_GUARD = 1e-9


class FunctionClass(str, Enum):
    """Which normalized family a test function belongs to."""

    UNIVALENT = "s"        # analytic univalent, f(0)=0, f'(0)=1
    POLE = "sp"            # meromorphic univalent with a simple pole at p in (0,1)
    CONCAVE = "coa"        # concave univalent with singularity at 1, parameter A in (1,2]
    CUSTOM = "custom"


JetFn = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray, np.ndarray]]


@dataclass(frozen=True)
class AnalyticFn:
    """An evaluatable analytic (or meromorphic) function with jet access.

    ``jet`` maps points to the value triple (f, f', f'') and must be defined on
    the open unit disk minus ``pole``.  ``deriv0`` records f'(0); it is 1 for
    every built-in fixture and equals the coefficient sum for combinations,
    which are intentionally not renormalized.
    """

    class_tag: FunctionClass
    jet: JetFn
    pole: complex | None = None
    p: float | None = None
    A: float | None = None
    label: str = ""
    deriv0: complex = 1.0 + 0.0j

    @property
    def params(self) -> dict[str, float]:
        out = {}
        if self.p is not None:
            out["p"] = self.p
        if self.A is not None:
            out["A"] = self.A
        return out


def koebe(theta: float = 0.0) -> AnalyticFn:
    """Rotation of z/(1-z)^2: the extremal growth fixture for the univalent class."""
    eps = cmath.exp(1j * theta)

    def jet(z):
        w = 1.0 - eps * z
        f = z / w**2
        f1 = (1.0 + eps * z) / w**3
        f2 = 2.0 * eps * (2.0 + eps * z) / w**4
        return f, f1, f2

    return AnalyticFn(FunctionClass.UNIVALENT, jet, label=f"koebe(theta={theta:g})")


def quadratic(c: float | complex = 0.5) -> AnalyticFn:
    """z + c z^2, univalent on the disk exactly when |c| <= 1/2."""
    if abs(c) > 0.5:
        raise DomainError(f"quadratic coefficient must satisfy |c| <= 1/2, got {c}")
    c = complex(c)

    def jet(z):
        za = np.asarray(z, dtype=complex)
        return za + c * za * za, 1.0 + 2.0 * c * za, np.full_like(za, 2.0 * c)

    return AnalyticFn(FunctionClass.UNIVALENT, jet, label=f"quadratic(c={c.real:g}{c.imag:+g}j)")


def identity_map() -> AnalyticFn:
    """The identity z, the most docile member of the univalent class."""

    def jet(z):
        za = np.asarray(z, dtype=complex)
        return za, np.ones_like(za), np.zeros_like(za)

    return AnalyticFn(FunctionClass.UNIVALENT, jet, label="identity")


def pole_extremal(p: float) -> AnalyticFn:
    """The extremal slit mapping -pz/((z-p)(1-pz)) with a simple pole at p.

    Implemented through its partial fractions so the derivatives are exact:
        f  = -p^2/((1-p^2)(z-p)) - p/((1-p^2)(1-pz)).
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"pole location must lie in (0,1), got {p}")
    c = 1.0 / (1.0 - p * p)

    def jet(z):
        d1 = z - p
        d2 = 1.0 - p * z
        f = -c * p * p / d1 - c * p / d2
        f1 = c * p * p / d1**2 - c * p * p / d2**2
        f2 = -2.0 * c * p * p / d1**3 - 2.0 * c * p**3 / d2**3
        return f, f1, f2

    return AnalyticFn(FunctionClass.POLE, jet, pole=complex(p), p=p, label=f"pole_extremal(p={p:g})")


def concave_wing(A: float) -> AnalyticFn:
    """The wing map (((1+z)/(1-z))^A - 1)/(2A), singular at z = 1.

    Principal branch throughout; (1+z)/(1-z) has positive real part on the
    disk, so the power never crosses the branch cut.  Its concavity transform
    is exactly (1-z)/(1+z), so membership in the concave family holds for
    every admissible A.
    """
    if not 1.0 < A <= 2.0:
        raise DomainError(f"concavity parameter must lie in (1,2], got {A}")

    def jet(z):
        w = 1.0 - z
        u = (1.0 + z) / w
        f = (u**A - 1.0) / (2.0 * A)
        f1 = u ** (A - 1.0) / w**2
        f2 = 2.0 * (A - 1.0) * u ** (A - 2.0) / w**4 + 2.0 * u ** (A - 1.0) / w**3
        return f, f1, f2

    return AnalyticFn(FunctionClass.CONCAVE, jet, pole=1.0 + 0.0j, A=A, label=f"concave_wing(A={A:g})")


_VARIANTS = ("koebe", "quadratic", "identity", "pole_extremal", "concave_wing")


def make_fixture(
    class_tag: FunctionClass | str,
    variant: str | None = None,
    *,
    p: float | None = None,
    A: float | None = None,
    theta: float = 0.0,
    c: float | complex = 0.5,
) -> AnalyticFn:
    """Build a named fixture for the requested class.

    ``variant`` defaults to the canonical member of each class: the Koebe map
    for the univalent class, the slit mapping for the pole class, and the wing
    map for the concave class.
    """
    tag = FunctionClass(class_tag)
    if variant is None:
        variant = {
            FunctionClass.UNIVALENT: "koebe",
            FunctionClass.POLE: "pole_extremal",
            FunctionClass.CONCAVE: "concave_wing",
        }.get(tag)
        if variant is None:
            raise UsageError("custom class requires an explicit variant")
    if variant not in _VARIANTS:
        raise UsageError(f"unknown fixture variant {variant!r}; choose from {_VARIANTS}")
    if variant == "koebe":
        return koebe(theta)
    if variant == "quadratic":
        return quadratic(c)
    if variant == "identity":
        return identity_map()
    if variant == "pole_extremal":
        if p is None:
            raise UsageError("pole_extremal requires p")
        return pole_extremal(p)
    if A is None:
        raise UsageError("concave_wing requires A")
    return concave_wing(A)


def eval_jet(f: AnalyticFn, z):
    """Evaluate (f(z), f'(z), f''(z)) with domain and pole guards.

    Accepts a scalar or an array of points.  Raises DomainError outside the
    guarded disk and SingularityError within POLE_GUARD of the pole.
    """
    scalar = np.isscalar(z) or (isinstance(z, np.ndarray) and z.ndim == 0)
    za = np.asarray(z, dtype=complex)
    bad = np.abs(za) > 1.0 - DISK_EDGE_GUARD
    if np.any(bad):
        offender = za[bad].flat[0] if za.shape else complex(za)
        raise DomainError(f"|z| must stay below 1 - {DISK_EDGE_GUARD:g}; got z={offender}")
    if f.pole is not None:
        near = np.abs(za - f.pole) < POLE_GUARD
        if np.any(near):
            offender = za[near].flat[0] if za.shape else complex(za)
            raise SingularityError(complex(offender), f"z={offender} is within {POLE_GUARD:g} of the pole at {f.pole}")
    v, d1, d2 = f.jet(za)
    if scalar:
        return complex(v), complex(d1), complex(d2)
    return np.asarray(v, dtype=complex), np.asarray(d1, dtype=complex), np.asarray(d2, dtype=complex)


def pair_coefficients(alpha: float, b: float) -> tuple[complex, complex]:
    """The two weights 1/(1 + b e^{i a}) and 1/(1 + e^{-i a}/b) of one pair.

    They sum to 1 in exact algebra; both are computed literally rather than
    through 1 - lambda so the identity stays a testable property.
    """
    if not 0.0 <= alpha < math.pi:
        raise DomainError(f"pair angle must lie in [0, pi), got {alpha}")
    if not b > 0.0:
        raise DomainError(f"pair magnitude must be positive, got {b}")
    lam_odd = 1.0 / (1.0 + b * cmath.exp(1j * alpha))
    lam_even = 1.0 / (1.0 + cmath.exp(-1j * alpha) / b)
    return lam_odd, lam_even


@dataclass(frozen=True)
class CombinationSpec:
    """n coefficient pairs (alpha_j, b_j) and the 2n functions they weight.

    Entry 2j-1 of ``functions`` is weighted by 1/(1 + b_j e^{i alpha_j}) and
    entry 2j by 1/(1 + e^{-i alpha_j}/b_j); each pair of weights sums to 1, so
    the full coefficient sum is n.
    """

    pairs: tuple[tuple[float, float], ...]
    functions: tuple[AnalyticFn, ...]

    def __post_init__(self):
        if len(self.functions) != 2 * len(self.pairs):
            raise UsageError(
                f"need exactly 2 functions per pair: {len(self.pairs)} pairs, {len(self.functions)} functions"
            )
        if not self.pairs:
            raise UsageError("at least one coefficient pair is required")
        for alpha, b in self.pairs:
            if not 0.0 <= alpha < math.pi:
                raise DomainError(f"pair angle must lie in [0, pi), got {alpha}")
            if not b > 0.0:
                raise DomainError(f"pair magnitude must be positive, got {b}")
        tags = {fn.class_tag for fn in self.functions}
        if len(tags) > 1:
            raise UsageError(f"all combined functions must share one class, got {sorted(t.value for t in tags)}")
        ps = {fn.p for fn in self.functions}
        As = {fn.A for fn in self.functions}
        if len(ps) > 1 or len(As) > 1:
            raise UsageError("all combined functions must share the same class parameters")

    @property
    def n(self) -> int:
        return len(self.pairs)

    def lambdas(self) -> tuple[complex, ...]:
        out: list[complex] = []
        for alpha, b in self.pairs:
            out.extend(pair_coefficients(alpha, b))
        return tuple(out)

    @classmethod
    def uniform(
        cls,
        alphas: Sequence[float],
        functions: Sequence[AnalyticFn],
        b: float | Sequence[float] = 1.0,
    ) -> "CombinationSpec":
        """Pairs from angles and a shared (or per-pair) magnitude, default b=1."""
        bs = [b] * len(alphas) if np.isscalar(b) else list(b)
        if len(bs) != len(alphas):
            raise UsageError("need one magnitude per angle")
        return cls(tuple((float(a), float(bb)) for a, bb in zip(alphas, bs)), tuple(functions))

    @classmethod
    def from_lambdas(cls, lambdas: Sequence[complex], functions: Sequence[AnalyticFn]) -> "CombinationSpec":
        """Recover (alpha_j, b_j) pairs from raw odd-index coefficients.

        Inverts lambda = 1/(1 + b e^{i alpha}) exactly: with w = (1-lambda)/lambda,
        b = |w| and alpha = arg(w).  Angles outside [0, pi) are rejected rather
        than wrapped, because the radius formulas are only stated there.
        """
        pairs = []
        for lam in lambdas:
            lam = complex(lam)
            if lam == 0 or lam == 1:
                raise DomainError(f"coefficient {lam} cannot be inverted to a pair")
            w = (1.0 - lam) / lam
            alpha = cmath.phase(w)
            b = abs(w)
            if not 0.0 <= alpha < math.pi:
                raise DomainError(f"coefficient {lam} has pair angle {alpha:g} outside [0, pi)")
            pairs.append((alpha, b))
        return cls(tuple(pairs), tuple(functions))


def combine(spec: CombinationSpec) -> AnalyticFn:
    """The coefficient-weighted sum of the spec's functions.

    The result is deliberately not renormalized: its derivative at 0 equals the
    coefficient sum n and is recorded in ``deriv0``.
    """
    lams = spec.lambdas()
    fns = spec.functions
    first = fns[0]

    def jet(z):
        za = np.asarray(z, dtype=complex)
        v = np.zeros_like(za)
        d1 = np.zeros_like(za)
        d2 = np.zeros_like(za)
        for lam, fn in zip(lams, fns):
            fv, f1, f2 = fn.jet(za)
            v = v + lam * fv
            d1 = d1 + lam * f1
            d2 = d2 + lam * f2
        return v, d1, d2

    return AnalyticFn(
        class_tag=first.class_tag,
        jet=jet,
        pole=first.pole,
        p=first.p,
        A=first.A,
        label=f"combine(n={spec.n}, [" + ", ".join(fn.label for fn in fns) + "])",
        deriv0=sum(lams),
    )
