"""Radius polynomials, the closed-form univalence radius, and root isolation.

For each supported (class, mode) pair the module builds the real polynomial
whose smallest positive root bounds the radius from below, then isolates that
root by a uniform sign-change scan followed by bisection.  The univalence
radius has a closed form and needs no polynomial.

Three of the polynomial families exist in two variants because the printed
coefficient tables and the bounds they were cleared from disagree:

* pole-class convexity: the printed cubic coefficient reads
  (1-2n+p^2-2np^2) + (1+p^2)*sec-sum, but clearing the denominators of the
  underlying rational bound gives -(1+p^2)*(2n-1+2*sec-sum).  The printed
  version can fail to have a root in (0, p) at all (e.g. p=0.8, n=1,
  alphas=[0]), so the cleared form is the default and the printed form is
  kept as the "as-stated" variant.
* pole-class concavity: the printed sextic differs from the cleared form in
  the linear and quartic coefficients.  The printed sextic always roots in
  (0, p) and is the default; ``concavity_root_gap`` reports how far the two
  roots sit apart instead of hiding the mismatch.
* concave-class concavity: the printed leading coefficient (A-5)/(A-1) is
  the general (A+3-4n)/(A-1) frozen at n=2; the general form is the default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, UsageError
from .functions import FunctionClass

#: number of uniform scan cells used by the root isolator
GRID_CELLS = 10_000
#: default absolute tolerance on the isolated root
DEFAULT_TOL = 1e-12
#: a found root r must satisfy |psi(r)| <= RESIDUAL_TOL * max(1, max|coeff|)
RESIDUAL_TOL = 1e-10


class Mode(str, Enum):
    UNIVALENCE = "univalence"
    CONVEXITY = "convexity"
    CONCAVITY = "concavity"


class Variant(str, Enum):
    AS_PROOF = "as-proof"    # coefficients cleared from the underlying bound
    AS_STATED = "as-stated"  # coefficients exactly as printed


class RootStatus(str, Enum):
    FOUND = "found"
    NO_ROOT_IN_BRACKET = "no-root-in-bracket"
    DEGENERATE_BRACKET = "degenerate-bracket"


@dataclass(frozen=True)
class PolyR:
    """Real univariate polynomial, ascending coefficients, degree <= 6.

    Leading zeros are kept so that degenerate leading coefficients remain
    visible instead of silently dropping the degree.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self):
        if not 1 <= len(self.coeffs) <= 7:
            raise DomainError(f"polynomial must have 1..7 coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = np.zeros_like(np.asarray(x, dtype=float)) if not np.isscalar(x) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self) -> float:
        return max(1.0, max(abs(c) for c in self.coeffs))


@dataclass(frozen=True)
class RadiusQuery:
    """One radius computation: class, mode, pair angles, class parameters.

    ``rho`` is the scale entering the univalence closed form (the radius
    inside which the members' derivatives are known to have positive real
    part); when omitted, ``default_rho`` supplies the classical lower bound
    for the class.  ``variant`` of None selects the per-family default.
    """

    cls: FunctionClass
    mode: Mode
    n: int
    alphas: tuple[float, ...]
    p: float | None = None
    A: float | None = None
    rho: float | None = None
    variant: Variant | None = None

    def __post_init__(self):
        object.__setattr__(self, "cls", FunctionClass(self.cls))
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        if self.variant is not None:
            object.__setattr__(self, "variant", Variant(self.variant))
        if self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n}")
        if len(self.alphas) != self.n:
            raise UsageError(f"need exactly n={self.n} angles, got {len(self.alphas)}")
        for a in self.alphas:
            if not 0.0 <= a < math.pi:
                raise DomainError(f"angles must lie in [0, pi), got {a}")
        if self.p is not None and not 0.0 < self.p < 1.0:
            raise DomainError(f"p must lie in (0,1), got {self.p}")
        if self.A is not None and not 1.0 < self.A <= 2.0:
            raise DomainError(f"A must lie in (1,2], got {self.A}")
        if self.rho is not None and not self.rho > 0.0:
            raise DomainError(f"rho must be positive, got {self.rho}")
        if self.cls == FunctionClass.POLE and self.p is None:
            raise UsageError("pole-class queries require p")
        if self.cls == FunctionClass.CONCAVE and self.A is None:
            raise UsageError("concave-class queries require A")
        if self.cls == FunctionClass.CUSTOM:
            raise UsageError("radius queries are defined for the s/sp/coa classes only")


@dataclass(frozen=True)
class RadiusResult:
    """Isolated radius with its certificate: polynomial, bracket, iterations."""

    radius: float
    poly: PolyR | None
    bracket: tuple[float, float]
    iterations: int
    status: RootStatus


def sec_sum(alphas) -> float:
    """sum_j sec(alpha_j / 2); each angle must lie in [0, pi).

    Always >= len(alphas) because sec is >= 1 on [0, pi/2).
    """
    total = 0.0
    for a in alphas:
        if not 0.0 <= a < math.pi:
            raise DomainError(f"angles must lie in [0, pi), got {a}")
        total += 1.0 / math.cos(0.5 * a)
    return total


def univalence_radius(n: int, alphas, rho: float) -> float:
    """Closed form (rho/n) * (S - sqrt(S^2 - n^2)) with S the secant sum.

    Evaluated as rho*n/(S + sqrt((S-n)(S+n))), with the excess S - n
    accumulated through 2 sin^2(a/4)/cos(a/2) per angle: this avoids the
    cancellation of the literal form both when S is large and when S is
    barely above n.  The result lies in (0, rho], with rho attained exactly
    when every angle is 0.
    """
    if rho <= 0.0:
        raise DomainError(f"rho must be positive, got {rho}")
    if n < 1 or len(tuple(alphas)) != n:
        raise UsageError("need exactly n angles")
    excess = 0.0  # S - n, each term sec(a/2) - 1 rewritten free of cancellation
    for a in alphas:
        if not 0.0 <= a < math.pi:
            raise DomainError(f"angles must lie in [0, pi), got {a}")
        half = 0.5 * a
        excess += 2.0 * math.sin(0.5 * half) ** 2 / math.cos(half)
    s = n + excess
    return rho * n / (s + math.sqrt(excess * (s + n)))


def default_rho(cls: FunctionClass, *, p: float | None = None, A: float | None = None) -> float:
    """Classical positive-derivative radius of the class, used as the default
    univalence scale.

    For the pole class this is the smallest positive root of
    p(k+1) r^2 - k(1+p^2) r + p(k-1) with k = e^{pi/4}; for the concave class
    it is sin(pi/(4A)).  Both are imported lower bounds, not computed here.
    """
    cls = FunctionClass(cls)
    if cls == FunctionClass.POLE:
        if p is None or not 0.0 < p < 1.0:
            raise DomainError(f"p must lie in (0,1), got {p}")
        k = math.exp(math.pi / 4.0)
        disc = (k * (1.0 + p * p)) ** 2 - 4.0 * p * p * (k * k - 1.0)
        return (k * (1.0 + p * p) - math.sqrt(disc)) / (2.0 * p * (k + 1.0))
    if cls == FunctionClass.CONCAVE:
        if A is None or not 1.0 < A <= 2.0:
            raise DomainError(f"A must lie in (1,2], got {A}")
        return math.sin(math.pi / (4.0 * A))
    raise UsageError(f"no default univalence scale for class {cls.value!r}")


_DEFAULT_VARIANT = {
    (FunctionClass.POLE, Mode.CONVEXITY): Variant.AS_PROOF,
    (FunctionClass.CONCAVE, Mode.CONCAVITY): Variant.AS_PROOF,
    (FunctionClass.POLE, Mode.CONCAVITY): Variant.AS_STATED,
}


def resolve_variant(query: RadiusQuery) -> Variant:
    if query.variant is not None:
        return query.variant
    return _DEFAULT_VARIANT.get((query.cls, query.mode), Variant.AS_PROOF)


def _poly_univalent_concavity(n: int, S: float, A: float) -> PolyR:
    # quadratic in r: ((A+3-4n)/(A-1)) r^2 - (2/(A-1)) (A+1+4S) r + 1
    return PolyR((1.0, -2.0 * (A + 1.0 + 4.0 * S) / (A - 1.0), (A + 3.0 - 4.0 * n) / (A - 1.0)))


def _poly_pole_convexity(n: int, S: float, p: float, variant: Variant) -> PolyR:
    if variant == Variant.AS_STATED:
        cubic = (1.0 - 2.0 * n + p * p - 2.0 * n * p * p) + (1.0 + p * p) * S
    else:
        cubic = -(1.0 + p * p) * (2.0 * n - 1.0 + 2.0 * S)
    return PolyR((
        p,
        -(1.0 + p * p) * (1.0 + 2.0 * S),
        2.0 * p * (n + 4.0 * S),
        cubic,
        p * (2.0 * n - 1.0),
    ))


def _poly_concave_concavity(n: int, S: float, A: float, variant: Variant) -> PolyR:
    lead = (A - 5.0) / (A - 1.0) if variant == Variant.AS_STATED else (A + 3.0 - 4.0 * n) / (A - 1.0)
    return PolyR((1.0, -2.0 * (A + 1.0 + 2.0 * A * S) / (A - 1.0), lead))


def _poly_concave_convexity(n: int, S: float, A: float) -> PolyR:
    return PolyR((1.0, -2.0 * A * S, 2.0 * n - 1.0))


def _poly_pole_concavity(n: int, S: float, p: float, variant: Variant) -> PolyR:
    p2, p3, p4 = p * p, p**3, p**4
    if variant == Variant.AS_STATED:
        return PolyR((
            p2,
            -2.0 * p * (1.0 + p2 + 2.0 * S),
            (p4 + 1.0) * (1.0 - 2.0 * S) - p2 * (1.0 + 2.0 * n - 4.0 * S),
            (4.0 + 4.0 * S) * (p3 + p),
            (2.0 * n - 1.0 - 2.0 * S) - p2 * (3.0 - 4.0 * S) + 2.0 * n - 1.0,
            -2.0 * (p3 + p) * (1.0 + S),
            (3.0 - 2.0 * n) * p2,
        ))
    # cleared from 2p(1-r^2)/((p+r)(1+pr)) - 1 - 2n r^2/(1-r^2)
    #   - (2r/(1-r^2)) ((p-r)/(1-pr) + (1-pr)/(p-r)) S
    return PolyR((
        p2,
        -2.0 * p * (S + 1.0) * (1.0 + p2),
        -2.0 * S * p4 + 4.0 * S * p2 - 2.0 * S - 2.0 * n * p2 + p4 - p2 + 1.0,
        4.0 * p * (S + 1.0) * (1.0 + p2),
        -2.0 * S * p4 + 4.0 * S * p2 - 2.0 * S + 2.0 * n * p4 + 2.0 * n - p4 - 3.0 * p2 - 1.0,
        -2.0 * p * (S + 1.0) * (1.0 + p2),
        -p2 * (2.0 * n - 3.0),
    ))


def build_radius_polynomial(query: RadiusQuery) -> PolyR:
    """The polynomial whose smallest positive root is the radius bound.

    Supported (class, mode) pairs: (s, concavity), (sp, convexity),
    (sp, concavity), (coa, convexity), (coa, concavity).  Univalence has a
    closed form instead of a polynomial and is rejected here.
    """
    S = sec_sum(query.alphas)
    variant = resolve_variant(query)
    key = (query.cls, query.mode)
    if key == (FunctionClass.UNIVALENT, Mode.CONCAVITY):
        if query.A is None:
            raise UsageError("s-class concavity requires the target parameter A")
        return _poly_univalent_concavity(query.n, S, query.A)
    if key == (FunctionClass.POLE, Mode.CONVEXITY):
        return _poly_pole_convexity(query.n, S, query.p, variant)
    if key == (FunctionClass.POLE, Mode.CONCAVITY):
        return _poly_pole_concavity(query.n, S, query.p, variant)
    if key == (FunctionClass.CONCAVE, Mode.CONVEXITY):
        return _poly_concave_convexity(query.n, S, query.A)
    if key == (FunctionClass.CONCAVE, Mode.CONCAVITY):
        return _poly_concave_concavity(query.n, S, query.A, variant)
    raise UsageError(f"no radius polynomial for class={query.cls.value!r} mode={query.mode.value!r}")


def smallest_positive_root(poly: PolyR, bracket: tuple[float, float], tol: float = DEFAULT_TOL) -> RadiusResult:
    """First root of ``poly`` in ``bracket`` by uniform scan plus bisection.

    Scans GRID_CELLS uniform subintervals for the first sign change and
    bisects it to width <= tol.  If no sign change exists but some grid value
    is zero to scale-relative precision, that grid point is returned; otherwise
    the status reports that the bracket holds no root.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (0.0 <= lo < hi):
        return RadiusResult(math.nan, poly, (lo, hi), 0, RootStatus.DEGENERATE_BRACKET)
    if not 0.0 < tol <= 1e-6:
        raise DomainError(f"tolerance must lie in (0, 1e-6], got {tol}")

    xs = np.linspace(lo, hi, GRID_CELLS + 1)
    vals = poly(xs)
    signs = np.sign(vals)
    scale = poly.scale()

    exact = np.nonzero(np.abs(vals) <= 1e-15 * scale)[0]
    flips = np.nonzero(signs[:-1] * signs[1:] < 0)[0]

    cell = None
    if flips.size and (not exact.size or flips[0] < exact[0]):
        cell = int(flips[0])
    elif exact.size:
        x = float(xs[exact[0]])
        if lo < x < hi:
            return RadiusResult(x, poly, (lo, hi), 0, RootStatus.FOUND)
        if exact[0] == 0 and flips.size:
            cell = int(flips[0])

    if cell is None:
        near = np.nonzero(np.abs(vals) <= 1e-12 * scale)[0]
        interior = [i for i in near if lo < xs[i] < hi]
        if interior:
            return RadiusResult(float(xs[interior[0]]), poly, (lo, hi), 0, RootStatus.FOUND)
        return RadiusResult(math.nan, poly, (lo, hi), 0, RootStatus.NO_ROOT_IN_BRACKET)

    a, b = float(xs[cell]), float(xs[cell + 1])
    fa = float(poly(a))
    iterations = 0
    # bisect to the requested width, then keep halving (to the floating-point
    # floor) until the residual certificate |psi(root)| <= RESIDUAL_TOL*scale
    # holds as well, so it is an invariant of every Found result
    while iterations < 200:
        root = 0.5 * (a + b)
        if b - a <= tol and abs(float(poly(root))) <= RESIDUAL_TOL * scale:
            break
        if root <= a or root >= b:
            break
        fm = float(poly(root))
        iterations += 1
        if fm == 0.0:
            a = b = root
            break
        if fa * fm < 0.0:
            b = root
        else:
            a, fa = root, fm
    root = 0.5 * (a + b)
    return RadiusResult(root, poly, (lo, hi), iterations, RootStatus.FOUND)


def _bracket_for(query: RadiusQuery) -> tuple[float, float]:
    if query.cls == FunctionClass.POLE:
        return (0.0, query.p)
    return (0.0, 1.0)


def radius(query: RadiusQuery, tol: float = DEFAULT_TOL) -> RadiusResult:
    """Compute the radius for a query.

    Univalence wraps the closed form (no polynomial); the other modes build
    the radius polynomial and isolate its smallest root in (0, 1), or (0, p)
    for the pole class where the underlying bounds only hold up to the pole.
    """
    if query.mode == Mode.UNIVALENCE:
        if query.cls == FunctionClass.UNIVALENT:
            raise UsageError("no univalence radius formula is provided for the s class")
        rho = query.rho if query.rho is not None else default_rho(query.cls, p=query.p, A=query.A)
        value = univalence_radius(query.n, query.alphas, rho)
        return RadiusResult(value, None, (0.0, rho), 0, RootStatus.FOUND)
    poly = build_radius_polynomial(query)
    return smallest_positive_root(poly, _bracket_for(query), tol)


@dataclass(frozen=True)
class VariantGap:
    """Roots of the two coefficient variants of one query, and their distance."""

    as_stated: float
    as_proof: float
    gap: float
    flagged: bool


def concavity_root_gap(query: RadiusQuery, tol: float = DEFAULT_TOL, threshold: float = 1e-6) -> VariantGap:
    """Cross-check the pole-class concavity sextic against the cleared bound.

    Isolates the smallest root of both coefficient variants and reports the
    distance; ``flagged`` marks queries where they disagree by more than
    ``threshold``.  Intended for auditing, not for hiding either root.
    """
    if (query.cls, query.mode) != (FunctionClass.POLE, Mode.CONCAVITY):
        raise UsageError("variant cross-check applies to pole-class concavity queries")
    stated = radius(RadiusQuery(query.cls, query.mode, query.n, query.alphas,
                                p=query.p, A=query.A, variant=Variant.AS_STATED), tol)
    proof = radius(RadiusQuery(query.cls, query.mode, query.n, query.alphas,
                               p=query.p, A=query.A, variant=Variant.AS_PROOF), tol)
    gap = abs(stated.radius - proof.radius)
    return VariantGap(stated.radius, proof.radius, gap, bool(gap > threshold))
