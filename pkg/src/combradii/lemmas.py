"""Auxiliary bounds behind the radius formulas, with Monte Carlo certification.

The radius polynomials all rest on one estimate: if 2n sampled values u_j, v_j
lie in the disk |w - a| <= d and are weighted by the paired coefficients
1/(1 + b e^{i alpha_j}) and 1/(1 + e^{-i alpha_j}/b), the real part of the
weighted sum stays within a*n -/+ d * sum_j sec(alpha_j/2).  The secant enters
through the magnitude envelope of one coefficient pair, which is maximized at
b = 1.  This module evaluates those quantities and certifies the inequalities
on randomized inputs with a fixed, overridable seed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DomainError, PreconditionError
from .radii import sec_sum

#: default PRNG seed for every certification run (reproducibility over novelty)
DEFAULT_SEED = 191

#: additive slack allowed when checking the certified inequalities
CERT_SLACK = 1e-12


@dataclass(frozen=True)
class BoundEnv:
    """Sampling environment: disk center a, disk radius d with a > d >= 0,
    shared pair magnitude b > 0, and the n pair angles in [0, pi)."""

    a: float
    d: float
    b: float
    alphas: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(float(x) for x in self.alphas))
        if not self.a > self.d >= 0.0:
            raise DomainError(f"need a > d >= 0, got a={self.a}, d={self.d}")
        if not self.b > 0.0:
            raise DomainError(f"need b > 0, got b={self.b}")
        for alpha in self.alphas:
            if not 0.0 <= alpha < math.pi:
                raise DomainError(f"angles must lie in [0, pi), got {alpha}")

    @property
    def n(self) -> int:
        return len(self.alphas)


def weighted_sum_bounds(env: BoundEnv) -> tuple[float, float]:
    """The certified band (a*n - d*S, a*n + d*S) for Re of the weighted sum."""
    s = sec_sum(env.alphas)
    return env.a * env.n - env.d * s, env.a * env.n + env.d * s


def weighted_sum(
    env: BoundEnv,
    u: Sequence[complex],
    v: Sequence[complex],
    per_pair_b: Sequence[float] | None = None,
) -> complex:
    """sum_j u_j/(1 + b e^{i a_j}) + sum_j v_j/(1 + e^{-i a_j}/b).

    Every sample must lie in the closed disk |w - a| <= d (a hair of floating
    slack is tolerated); violations raise PreconditionError.  ``per_pair_b``
    is an experimental generalization that gives pair j its own magnitude
    instead of the shared env.b; the certified band holds for it as well
    because each pair is bounded independently.
    """
    if len(u) != env.n or len(v) != env.n:
        raise PreconditionError(f"need {env.n} samples in each of u and v")
    bs = [env.b] * env.n if per_pair_b is None else [float(b) for b in per_pair_b]
    if len(bs) != env.n or any(b <= 0.0 for b in bs):
        raise DomainError("per_pair_b needs one positive magnitude per pair")
    for name, seq in (("u", u), ("v", v)):
        for j, w in enumerate(seq):
            if abs(complex(w) - env.a) > env.d + 1e-12:
                raise PreconditionError(f"{name}[{j}]={w} lies outside the disk |w - {env.a}| <= {env.d}")
    total = 0.0 + 0.0j
    for alpha, b, uj, vj in zip(env.alphas, bs, u, v):
        total += complex(uj) / (1.0 + b * cmath.exp(1j * alpha))
        total += complex(vj) / (1.0 + cmath.exp(-1j * alpha) / b)
    return total


def product_re_lower_bound(w0: complex, a: float, d: float) -> float:
    """|w0| * (a cos(arg w0) - d): a floor for Re(w*w0) over the disk |w-a| < d."""
    if not a > d >= 0.0:
        raise DomainError(f"need a > d >= 0, got a={a}, d={d}")
    w0 = complex(w0)
    return abs(w0) * (a * math.cos(cmath.phase(w0)) - d)


def pair_weight_magnitude(b: float, alpha: float) -> float:
    """(1+b)/sqrt(1 + 2b cos(alpha) + b^2): the combined magnitude of one
    coefficient pair.  Its maximum over b > 0 sits at b = 1 and equals
    sec(alpha/2).

    The radicand is evaluated as (1-b)^2 + 4b cos^2(alpha/2), which is the
    same quantity without the cancellation that the literal form suffers for
    alpha near pi with b near 1.
    """
    if not b > 0.0:
        raise DomainError(f"need b > 0, got {b}")
    if not 0.0 <= alpha < math.pi:
        raise DomainError(f"angle must lie in [0, pi), got {alpha}")
    half = math.cos(0.5 * alpha)
    return (1.0 + b) / math.sqrt((1.0 - b) ** 2 + 4.0 * b * half * half)


def _magnitude_cmp(x1: float, x2: float, c: float) -> int:
    # Exact sign of G(x1)^2 - G(x2)^2 by cross multiplication in rationals;
    # floats are exact rationals, so ties are genuine ties of the float model.
    f1, f2, fc = Fraction(x1), Fraction(x2), Fraction(c)
    lhs = (1 + f1) ** 2 * (1 + 2 * f2 * fc + f2 * f2)
    rhs = (1 + f2) ** 2 * (1 + 2 * f1 * fc + f1 * f1)
    if lhs == rhs:
        return 0
    return 1 if lhs > rhs else -1


def pair_weight_argmax(alpha: float, lo: float = 0.01, hi: float = 100.0, iters: int = 72) -> tuple[float, float]:
    """Golden-section scan of the pair magnitude over b in [lo, hi].

    Comparisons are carried out in exact rational arithmetic, so the scan
    converges to the true maximizer even where the magnitude is too flat for
    floating-point comparisons to resolve.  Returns (argmax, value).
    """
    if not 0.0 <= alpha < math.pi:
        raise DomainError(f"angle must lie in [0, pi), got {alpha}")
    c = math.cos(alpha)
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = float(lo), float(hi)
    for _ in range(iters):
        x1 = b - invphi * (b - a)
        x2 = a + invphi * (b - a)
        if x1 >= x2:
            break
        if _magnitude_cmp(x1, x2, c) > 0:
            b = x2
        else:
            a = x1
    bstar = 0.5 * (a + b)
    return bstar, pair_weight_magnitude(bstar, alpha)


def caratheodory_disk(rho: float, r: float) -> tuple[float, float]:
    """Center and radius of the disk containing P(z) on |z| = r whenever P has
    positive real part on |z| < rho and P(0) = 1.

    center = (1 + (r/rho)^2)/(1 - (r/rho)^2), radius = (2r/rho)/(1 - (r/rho)^2);
    both depend on r and rho only through the ratio r/rho.
    """
    if not 0.0 < rho <= 1.0:
        raise DomainError(f"need 0 < rho <= 1, got {rho}")
    if not 0.0 <= r < rho:
        raise DomainError(f"need 0 <= r < rho, got r={r}, rho={rho}")
    t = r / rho
    denom = 1.0 - t * t
    return (1.0 + t * t) / denom, 2.0 * t / denom


@dataclass(frozen=True)
class CertReport:
    """Outcome of one randomized certification batch."""

    name: str
    trials: int
    violations: int
    worst_slack: float
    seed: int

    @property
    def passed(self) -> bool:
        return self.violations == 0


def certify_weighted_sum_bounds(trials: int = 100_000, seed: int = DEFAULT_SEED, max_pairs: int = 4) -> CertReport:
    """Randomized check of the weighted-sum band, zero violations required.

    Samples n in 1..max_pairs, a in (0.1, 5), d in [0, 0.999a), log-uniform b
    in (0.01, 100), angles in [0, pi), and u_j, v_j uniformly in the closed
    disk.  Slack below -CERT_SLACK counts as a violation.
    """
    rng = np.random.default_rng(seed)
    ns = rng.integers(1, max_pairs + 1, size=trials)
    violations = 0
    worst = math.inf
    for n in range(1, max_pairs + 1):
        m = int(np.count_nonzero(ns == n))
        if m == 0:
            continue
        a = rng.uniform(0.1, 5.0, (m, 1))
        d = a * rng.uniform(0.0, 0.999, (m, 1))
        b = np.exp(rng.uniform(math.log(0.01), math.log(100.0), (m, 1)))
        alphas = rng.uniform(0.0, math.pi, (m, n))
        ru = d * np.sqrt(rng.uniform(0.0, 1.0, (m, n)))
        rv = d * np.sqrt(rng.uniform(0.0, 1.0, (m, n)))
        u = a + ru * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, (m, n)))
        v = a + rv * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, (m, n)))
        w = (u / (1.0 + b * np.exp(1j * alphas))).sum(axis=1)
        w += (v / (1.0 + np.exp(-1j * alphas) / b)).sum(axis=1)
        s = (1.0 / np.cos(alphas / 2.0)).sum(axis=1)
        lo = a[:, 0] * n - d[:, 0] * s
        hi = a[:, 0] * n + d[:, 0] * s
        slack = np.minimum(w.real - lo, hi - w.real) + CERT_SLACK
        violations += int(np.count_nonzero(slack < 0.0))
        worst = min(worst, float(slack.min()))
    return CertReport("weighted-sum bounds", trials, violations, worst, seed)


def certify_product_bound(trials: int = 10_000, seed: int = DEFAULT_SEED) -> CertReport:
    """Randomized check of Re(w*w0) >= |w0|(a cos(arg w0) - d) on |w-a| < d."""
    rng = np.random.default_rng(seed)
    a = rng.uniform(0.1, 5.0, trials)
    d = a * rng.uniform(0.0, 0.999, trials)
    w = a + d * np.sqrt(rng.uniform(0.0, 1.0, trials)) * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, trials))
    w0 = rng.uniform(0.1, 3.0, trials) * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, trials))
    bound = np.abs(w0) * (a * np.cos(np.angle(w0)) - d)
    slack = (w * w0).real - bound + CERT_SLACK
    violations = int(np.count_nonzero(slack < 0.0))
    return CertReport("product lower bound", trials, violations, float(slack.min()), seed)


def certify_weight_maximum(
    trials: int = 1_000,
    seed: int = DEFAULT_SEED,
    loc_tol: float = 1e-8,
    val_tol: float = 1e-10,
) -> CertReport:
    """Scan the pair magnitude for random angles; the maximum must sit within
    loc_tol of b = 1 with value within val_tol of sec(alpha/2).

    Angles are drawn from (0.01, pi - 0.01): at alpha = 0 the magnitude is
    identically 1 and the maximizer is not unique, so the location claim is
    vacuous there.
    """
    rng = np.random.default_rng(seed)
    alphas = rng.uniform(0.01, math.pi - 0.01, trials)
    violations = 0
    worst = math.inf
    for alpha in alphas:
        bstar, value = pair_weight_argmax(float(alpha))
        target = 1.0 / math.cos(alpha / 2.0)
        slack = min(loc_tol - abs(bstar - 1.0), val_tol - abs(value - target))
        worst = min(worst, slack)
        if slack < 0.0:
            violations += 1
    return CertReport("weight maximum", trials, violations, worst, seed)


def certify_disk_envelope(trials: int = 1_000, seed: int = DEFAULT_SEED, tol: float = 1e-10) -> CertReport:
    """Sample Moebius maps with positive real part on |z| < rho and P(0) = 1,
    and check their circle values against ``caratheodory_disk``."""
    rng = np.random.default_rng(seed)
    rho = rng.uniform(0.2, 0.95, trials)
    # |c| <= 1/rho keeps Re P > 0 on |z| < rho; the ratio 1 endpoint is the tight case
    c = np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, trials)) * rng.uniform(0.05, 1.0, trials) / rho
    r = rho * rng.uniform(0.0, 0.999, trials)
    z = r * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi, trials))
    values = (1.0 + c * z) / (1.0 - c * z)
    t = r / rho
    center = (1.0 + t * t) / (1.0 - t * t)
    radius = 2.0 * t / (1.0 - t * t)
    slack = radius + tol - np.abs(values - center)
    violations = int(np.count_nonzero(slack < 0.0))
    return CertReport("disk envelope", trials, violations, float(slack.min()), seed)
