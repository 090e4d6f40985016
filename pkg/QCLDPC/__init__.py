"""
QCLDPC: entanglement-assisted quantum codes from classical QC-LDPC codes.

Construct the codes, verify their structure (ranks, ebits, girth, dual
containment) and compare them under depolarizing noise with sum-product
decoding.
"""

from QCLDPC.ring_poly import (
    PlainPoly,
    RingPoly,
    circulant_rank,
    gcd_with_modulus,
    poly_add,
    poly_from_exponents,
    poly_gcd,
    poly_mul,
    poly_transpose,
)
from QCLDPC.gf2 import (
    BitMatrix,
    circulant_from_poly,
    matrix_multiply,
    matrix_rank,
    null_space_basis,
    transpose,
)
from QCLDPC.exponent import (
    DifferenceVector,
    ExpEntry,
    ExponentMatrix,
    dual_containing_screen,
    expand_to_binary,
    expand_to_poly,
    girth6_screen,
    hhat,
    hhat_generator,
    hhat_poly,
    is_multiplicity_even,
    is_multiplicity_free,
    load_exponent_matrix,
    parse_exponent_matrix,
    dump_exponent_matrix,
    row_difference,
    satisfies_circulant_condition,
)
from QCLDPC.analysis import (
    ClassicalCodeInfo,
    EAQECCParams,
    blockwise_rank_bound,
    classical_info,
    css_pair_check,
    eaqecc_params,
    ebit_count,
    find_low_weight_codeword,
    is_dual_containing,
    min_distance_upper_bound,
    rank_bound,
    rank_bound_applies,
    tanner_girth,
    weight_bound_violations,
    weight_rank_bound,
)
from QCLDPC.constructions import (
    BENCHMARK_CODES,
    BUILTIN_CODES,
    CodeKind,
    CodeSpec,
    DeclaredParams,
    ex1,
    ex2,
    export_code,
    get_code,
    hagiwara_imai,
    mackay_b,
    type1_example,
    type2_example,
)
from QCLDPC.spa import DecodeResult, TannerGraph, build_tanner, spa_decode
from QCLDPC.channel import (
    SimConfig,
    SimReport,
    TrialOutcome,
    run_simulation,
    run_sweep,
    run_trial,
    sample_depolarizing,
    wilson_interval,
    write_csv,
)

__all__ = [
    "PlainPoly", "RingPoly", "circulant_rank", "gcd_with_modulus", "poly_add",
    "poly_from_exponents", "poly_gcd", "poly_mul", "poly_transpose",
    "BitMatrix", "circulant_from_poly", "matrix_multiply", "matrix_rank",
    "null_space_basis", "transpose",
    "DifferenceVector", "ExpEntry", "ExponentMatrix", "dual_containing_screen",
    "expand_to_binary", "expand_to_poly", "girth6_screen", "hhat", "hhat_generator",
    "hhat_poly", "is_multiplicity_even", "is_multiplicity_free",
    "load_exponent_matrix", "parse_exponent_matrix", "dump_exponent_matrix",
    "row_difference", "satisfies_circulant_condition",
    "ClassicalCodeInfo", "EAQECCParams", "blockwise_rank_bound", "classical_info",
    "css_pair_check", "eaqecc_params", "ebit_count", "find_low_weight_codeword",
    "is_dual_containing", "min_distance_upper_bound", "rank_bound",
    "rank_bound_applies", "tanner_girth", "weight_bound_violations", "weight_rank_bound",
    "BENCHMARK_CODES", "BUILTIN_CODES", "CodeKind", "CodeSpec", "DeclaredParams",
    "ex1", "ex2", "export_code", "get_code", "hagiwara_imai", "mackay_b",
    "type1_example", "type2_example",
    "DecodeResult", "TannerGraph", "build_tanner", "spa_decode",
    "SimConfig", "SimReport", "TrialOutcome", "run_simulation", "run_sweep",
    "run_trial", "sample_depolarizing", "wilson_interval", "write_csv",
]
