"""Exact arithmetic for h*-polynomials of Delta(0,q) simplices, Eulerian
simplices, Ehrhart products, and sign-pattern realization."""

from .polynomials import Poly, binom_poly, poly_from_json, poly_to_json, poly_to_text
from .delta import (
    DeltaQ,
    DivisibilityError,
    FastPreconditionError,
    HStar,
    hstar,
    hstar_family,
    hstar_fast,
    hstar_naive,
    l1_l2,
    special_family,
)
from .eulerian import (
    SdmSimplex,
    aleph,
    aleph_inv,
    descent_formula,
    descents,
    eulerian_descent,
    eulerian_recurrence,
    lehmer_decode,
    lehmer_encode,
    sdm,
    sdm_ehrhart,
    sdm_hstar,
)
from .oracle import (
    DilationCount,
    OracleGuardError,
    count_points,
    hstar_via_counts,
    interpolate_ehrhart,
)
from .ehrhart import (
    Delta,
    EhrhartPoly,
    EulerianS,
    Interval,
    PolytopeExpr,
    Quad,
    ReeveT,
    StdSimplex,
    block_ehrhart,
    ehr_dilate,
    ehr_product,
    expr_ehrhart,
    expr_from_json,
    expr_to_json,
    from_hstar,
    sign_vector,
)
from .signpattern import (
    ConstructResult,
    SearchExhausted,
    construct,
    construct_case6,
    decompose_pattern,
    format_pattern,
    greedy_params,
    instantiate,
    parse_pattern,
    predict_signs,
    verify_expr,
)

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "binom_poly",
    "poly_from_json",
    "poly_to_json",
    "poly_to_text",
    "DeltaQ",
    "DivisibilityError",
    "FastPreconditionError",
    "HStar",
    "hstar",
    "hstar_family",
    "hstar_fast",
    "hstar_naive",
    "l1_l2",
    "special_family",
    "SdmSimplex",
    "aleph",
    "aleph_inv",
    "descent_formula",
    "descents",
    "eulerian_descent",
    "eulerian_recurrence",
    "lehmer_decode",
    "lehmer_encode",
    "sdm",
    "sdm_ehrhart",
    "sdm_hstar",
    "DilationCount",
    "OracleGuardError",
    "count_points",
    "hstar_via_counts",
    "interpolate_ehrhart",
    "Delta",
    "EhrhartPoly",
    "EulerianS",
    "Interval",
    "PolytopeExpr",
    "Quad",
    "ReeveT",
    "StdSimplex",
    "block_ehrhart",
    "ehr_dilate",
    "ehr_product",
    "expr_ehrhart",
    "expr_from_json",
    "expr_to_json",
    "from_hstar",
    "sign_vector",
    "ConstructResult",
    "SearchExhausted",
    "construct",
    "construct_case6",
    "decompose_pattern",
    "format_pattern",
    "greedy_params",
    "instantiate",
    "parse_pattern",
    "predict_signs",
    "verify_expr",
]
