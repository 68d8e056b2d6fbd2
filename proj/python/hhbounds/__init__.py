"""Numerical verification of midpoint-gap bounds for m-convex derivative
classes: certification, the underlying integral identity, the bound
families, classical baselines and special-means applications."""

from hhbounds._core import (  # noqa: F401
    BoundFamily,
    BoundSet,
    Certificate,
    CertStatus,
    ExponentPair,
    FavardSides,
    FunctionSpec,
    Interval,
    MParam,
    PearcePecaricBounds,
    Prop1Result,
    Prop2Result,
    ProductBoundResult,
    ProductDirection,
    QuadResult,
    SandwichResult,
    SpecialCase,
    UBounds,
    Witness,
    __version__,
    anchor_nonpositive,
    arithmetic_mean,
    bakula_midpoint_bound,
    builtin,
    certify_concave_nonneg,
    certify_convex_on,
    certify_m_concave,
    certify_m_convex,
    certify_thunsdorff,
    classical_trapezoid_bound,
    derivative_at,
    dragomir_sandwich,
    favard_sides,
    integrate,
    logarithmic_mean,
    midpoint_gap,
    midpoint_identity_residual,
    p_log_mean,
    pearce_pecaric_bounds,
    prop1_bounds,
    prop2_bounds,
    product_bound,
    run_campaign_text,
    specialize_m1,
    t_bounds,
    trapezoid_gap,
    u_bounds,
    v_bounds,
)
