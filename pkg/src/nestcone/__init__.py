"""nestcone: exact-rational intersection pairings and polyhedral cone-duality
certificates for Hilbert schemes of points, nested Hilbert schemes, and
universal families over rational and K3 surfaces.

All core arithmetic is exact (``fractions.Fraction``); floats appear only in
no code path at all - even the SVG emitter rounds by integer arithmetic.
"""

from .errors import (
    DimensionMismatch,
    EmptyInput,
    FunctionalNotPositive,
    Inconsistent,
    InvalidGenus,
    InvalidIndex,
    InvalidInput,
    NestconeError,
    NotK3,
    NotPointed,
    ParseError,
    RangeError,
    SpaceMismatch,
    UnderDetermined,
    UnknownTable,
)
from .rationals import Rat, parse_rat, primitive, rat, rat_str
from .spaces import (
    CurClass,
    DivClass,
    SpaceId,
    SpaceKind,
    SurfaceModel,
    canonical_class,
    curve,
    curve_basis,
    curve_labels,
    curve_rank,
    divisor,
    divisor_basis,
    divisor_labels,
    divisor_rank,
    exceptional_class,
    hilb,
    hirzebruch,
    k3,
    nested,
    normalize_label,
    p1xp1,
    p2,
    pull_a,
    pull_b,
    pull_res,
    surface_divisor,
    surface_model,
    surface_space,
    tautological,
    tautological_a,
    tautological_b,
    univ,
    zero_curve,
    zero_divisor,
)
from .pairing import (
    PairingTable,
    class_from_pairings,
    curve_family_a,
    curve_family_a_alt,
    curve_family_b,
    curve_family_b_alt,
    curve_family_c,
    curve_functional,
    divisor_from_pairings,
    g1n_curve,
    k3_extremal_slope,
    nodal_curves_k3,
    pair,
    pairing_table,
    pushforward_a,
    pushforward_b,
)
from .cone import (
    COORD_SUM,
    Cone,
    CrossSection,
    Position,
    cone_contains,
    cone_equal,
    cone_from_rays,
    cross_section,
    dual,
    extremal_rays,
    position,
    positive_functional,
)
from .verify import (
    ASSERTED,
    CATALOG,
    EFF_P2_3_2_PRINTED_VARIANT,
    Certificate,
    Provenance,
    PULLBACK_OF_EFFECTIVE,
    PULLBACK_OF_NEF,
    RESIDUE_OF_NEF,
    RaySpec,
    TableReport,
    WitnessSpec,
    certify_eff,
    certify_nef,
    reconstruct_e1,
    reproduce_table,
    standard_eff_certificate,
    standard_eff_cone,
    standard_nef_certificate,
    standard_nef_cone,
    table_cone_with_labels,
)
from .studies import (
    AsymptoticFrame,
    AsymptoticReport,
    ButlerInput,
    ButlerReport,
    MovingCurve,
    asymptotic_cone,
    asymptotic_moving_curves,
    asymptotic_report,
    butler_check,
    butler_class,
    half_b_a,
    limit_cone,
)

__version__ = "0.1.0"
