"""Certify computed radii against the defining positivity conditions.

A radius claim here is always a lower bound: inside the claimed disk the real
part of the relevant quantity must be strictly positive for every combination
built from class fixtures.  Verification samples deterministic polar grids
(never random points) so failures are reproducible, and asserts nothing
outside the claimed disk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RootIsolationError, UsageError
from .functions import (
    AnalyticFn,
    CombinationSpec,
    FunctionClass,
    combine,
    concave_wing,
    koebe,
    pole_extremal,
    quadratic,
)
from .radii import Mode, RadiusQuery, RootStatus, radius
from .transforms import TransformKind, evaluate

DEFAULT_MARGIN = 0.95
DEFAULT_RADII = 64
DEFAULT_ANGLES = 192


@dataclass(frozen=True)
class VerifyReport:
    """Worst case over all sampled points of all fixture combinations."""

    query: RadiusQuery
    radius: float
    min_re: float
    worst_z: complex
    samples: int
    margin: float
    passed: bool


def transform_kind_for(query: RadiusQuery) -> TransformKind:
    """The positivity quantity that the query's radius claim is about."""
    key = (query.cls, query.mode)
    if key == (FunctionClass.UNIVALENT, Mode.CONCAVITY):
        return TransformKind.concavity(query.A)
    if key == (FunctionClass.CONCAVE, Mode.CONCAVITY):
        return TransformKind.concavity(query.A)
    if key == (FunctionClass.POLE, Mode.CONCAVITY):
        return TransformKind.pole_concavity(query.p)
    if key in ((FunctionClass.POLE, Mode.CONVEXITY), (FunctionClass.CONCAVE, Mode.CONVEXITY)):
        return TransformKind.convexity()
    raise UsageError(
        f"no positivity condition to verify for class={query.cls.value!r} mode={query.mode.value!r}"
    )


def min_re_on_circles(
    kind: TransformKind,
    F: AnalyticFn,
    r_max: float,
    n_radii: int = DEFAULT_RADII,
    n_angles: int = DEFAULT_ANGLES,
) -> tuple[float, complex]:
    """Minimum of Re(quantity) over {0} union {r_i e^{i theta_k}: r_i <= r_max}.

    The grid is deterministic: n_radii equispaced circles up to and including
    r_max, n_angles equispaced angles including 0 and pi.  Singularities or
    critical points inside the grid surface as errors carrying the point.
    """
    if not 0.0 <= r_max < 1.0:
        raise DomainError(f"r_max must lie in [0, 1), got {r_max}")
    if n_radii < 16 or n_angles < 16:
        raise DomainError("need at least 16 radii and 16 angles")
    rs = r_max * np.arange(1, n_radii + 1) / n_radii
    thetas = 2.0 * math.pi * np.arange(n_angles) / n_angles
    zs = np.concatenate(([0.0 + 0.0j], np.outer(rs, np.exp(1j * thetas)).ravel()))
    values = evaluate(kind, F, zs)
    re = np.asarray(values).real
    idx = int(np.argmin(re))
    return float(re[idx]), complex(zs[idx])


def default_fixture_specs(query: RadiusQuery) -> list[CombinationSpec]:
    """Deterministic combination specs built from the class's fixture pool.

    The univalent pool mixes Koebe rotations with z + z^2/2 so combinations do
    not collapse to a multiple of a single map.  The pole and concave classes
    only have one canonical fixture each, so their combinations are scalar
    multiples of it; magnitudes other than 1 are still exercised.
    """
    if query.cls == FunctionClass.UNIVALENT:
        pool = [koebe(0.0), koebe(math.pi / 2.0), koebe(math.pi), quadratic(0.5)]
    elif query.cls == FunctionClass.POLE:
        pool = [pole_extremal(query.p)]
    elif query.cls == FunctionClass.CONCAVE:
        pool = [concave_wing(query.A)]
    else:
        raise UsageError("fixture sets exist for the s/sp/coa classes only")

    def cycled(offset: int) -> tuple[AnalyticFn, ...]:
        return tuple(pool[(offset + i) % len(pool)] for i in range(2 * query.n))

    specs = [
        CombinationSpec.uniform(query.alphas, (pool[0],) * (2 * query.n), b=1.0),
        CombinationSpec.uniform(query.alphas, cycled(0), b=1.0),
        CombinationSpec.uniform(query.alphas, cycled(1), b=2.0),
    ]
    return specs


def verify_radius(
    query: RadiusQuery,
    fixture_set: list[CombinationSpec] | None = None,
    margin: float = DEFAULT_MARGIN,
    n_radii: int = DEFAULT_RADII,
    n_angles: int = DEFAULT_ANGLES,
    tol: float = 1e-12,
) -> VerifyReport:
    """Compute the query's radius, then require Re(quantity) > 0 on the grid
    up to margin * radius for every fixture combination.

    A negative minimum inside the claimed disk is a hard failure; positivity
    beyond the radius is neither asserted nor checked, because the claim is
    only a lower bound.
    """
    if not 0.0 < margin < 1.0:
        raise DomainError(f"margin must lie in (0,1), got {margin}")
    kind = transform_kind_for(query)
    result = radius(query, tol)
    if result.status != RootStatus.FOUND:
        raise RootIsolationError(f"radius isolation failed with status {result.status.value!r}")
    if fixture_set is None:
        fixture_set = default_fixture_specs(query)

    min_re = math.inf
    worst_z = 0.0 + 0.0j
    samples = 0
    for spec in fixture_set:
        probe = spec.functions[0]
        if probe.class_tag != query.cls:
            raise UsageError(
                f"fixture class {probe.class_tag.value!r} does not match query class {query.cls.value!r}"
            )
        if query.cls == FunctionClass.POLE and probe.p != query.p:
            raise UsageError(f"fixture pole p={probe.p} does not match query p={query.p}")
        if query.cls == FunctionClass.CONCAVE and probe.A != query.A:
            raise UsageError(f"fixture parameter A={probe.A} does not match query A={query.A}")
        F = combine(spec)
        re, z = min_re_on_circles(kind, F, margin * result.radius, n_radii, n_angles)
        samples += 1 + n_radii * n_angles
        if re < min_re:
            min_re, worst_z = re, z
    return VerifyReport(
        query=query,
        radius=result.radius,
        min_re=min_re,
        worst_z=worst_z,
        samples=samples,
        margin=margin,
        passed=bool(min_re > 0.0),
    )


def distortion_check(f: AnalyticFn, r: float, n_angles: int = 256) -> bool:
    """Check the pole-class growth envelope |k(-r)| <= |f(z)| <= |k(z)| on |z| = r,
    where k is the extremal slit mapping with the same pole.

    Sampled on n_angles equispaced points with 1e-10 slack on both sides.
    """
    if f.class_tag != FunctionClass.POLE or f.p is None:
        raise UsageError("distortion envelope applies to pole-class functions")
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0,1), got {r}")
    from .errors import SingularityError
    from .transforms import PARAM_GUARD

    if abs(r - f.p) < PARAM_GUARD:
        raise SingularityError(complex(r), f"circle |z|={r} passes within {PARAM_GUARD:g} of the pole at {f.p}")
    k = pole_extremal(f.p)
    thetas = 2.0 * math.pi * np.arange(n_angles) / n_angles
    z = r * np.exp(1j * thetas)
    fv = np.abs(f.jet(z)[0])
    kv = np.abs(k.jet(z)[0])
    lower = abs(k.jet(np.asarray(-r + 0.0j))[0])
    return bool(np.all(fv >= lower - 1e-10) and np.all(fv <= kv + 1e-10))
