"""Analysis of planar polyharmonic mappings given as truncated power series.

Univalence certification via slice maps and winding numbers, boundary jump
and continuity criteria, and certified close-to-convex biharmonic
constructions. The heavy lifting lives in the compiled ``_polyharm`` module.
"""

from ._polyharm import (  # noqa: F401
    AnalyticSeries,
    CtcCertificate,
    Curve,
    CurveTooCoarseError,
    DegeneratePointError,
    DivergenceReport,
    DomainError,
    GammaCurve,
    GridSpec,
    HarmonicMap,
    JumpReport,
    KhReport,
    PointOnCurveError,
    PolyharmonicMap,
    RadialLimit,
    RadoReport,
    SmallOReport,
    SpecParseError,
    Verdict,
    WirtingerDerivatives,
    Witness,
    __version__,
    boundary_function_radial,
    build_ctc_biharmonic,
    certify_ctc,
    continuity_integral,
    curve_self_intersects,
    default_eps_samples,
    dilatation,
    epsilon_family_probe,
    eval_analytic,
    eval_analytic_derivative,
    eval_harmonic,
    eval_polyharmonic,
    gamma_curve,
    is_univalent_harmonic,
    jacobian,
    jump_indicator,
    kh_coefficient_test,
    laplacian_power_probe,
    lemma1_slice_test,
    load_map_spec,
    map_spec_json,
    parse_map_spec,
    phi_quotient,
    rado_consistency_probe,
    slice,
    small_o_probe,
    truncated_geometric,
    truncated_log,
    winding_number,
    wirtinger,
)
