"""Radii of univalence, convexity and concavity for linear combinations of
univalent functions, with numerical certification of every claim."""

from .errors import (
    CombradiiError,
    CriticalPointError,
    DomainError,
    PreconditionError,
    RootIsolationError,
    SingularityError,
    UsageError,
)
from .functions import (
    AnalyticFn,
    CombinationSpec,
    FunctionClass,
    combine,
    concave_wing,
    eval_jet,
    identity_map,
    koebe,
    make_fixture,
    pair_coefficients,
    pole_extremal,
    quadratic,
)
from .lemmas import (
    BoundEnv,
    CertReport,
    caratheodory_disk,
    certify_disk_envelope,
    certify_product_bound,
    certify_weight_maximum,
    certify_weighted_sum_bounds,
    pair_weight_argmax,
    pair_weight_magnitude,
    product_re_lower_bound,
    weighted_sum,
    weighted_sum_bounds,
)
from .radii import (
    Mode,
    PolyR,
    RadiusQuery,
    RadiusResult,
    RootStatus,
    Variant,
    build_radius_polynomial,
    concavity_root_gap,
    default_rho,
    radius,
    sec_sum,
    smallest_positive_root,
    univalence_radius,
)
from .transforms import (
    TransformKind,
    concavity_operator,
    convexity_operator,
    decomposition_discrepancy,
    log_deriv_ratio,
    log_deriv_ratio_decomposed,
    pole_concavity_limit,
    pole_concavity_operator,
)
from .verify import (
    VerifyReport,
    default_fixture_specs,
    distortion_check,
    min_re_on_circles,
    transform_kind_for,
    verify_radius,
)

__version__ = "0.1.0"
