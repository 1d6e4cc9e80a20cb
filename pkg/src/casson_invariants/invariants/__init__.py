from casson_invariants.invariants.census import (
    CharacterCensus,
    bb_census,
    sigma_pair,
    sigma_triple,
)
from casson_invariants.invariants.expressions import (
    h1_expr,
    lambda_psl_expr,
    lambda_sl_expr,
)
from casson_invariants.invariants.formulas import (
    BaseGeometry,
    TheoremCase,
    Xi3Rule,
    base_geometry,
    h1_small_seifert,
    h1_twist_surgery,
    lambda_psl_seifert_hs,
    lambda_psl_small_seifert,
    lambda_psl_twist,
    lambda_sl_small_seifert,
    small_seifert_presentation,
    sl_formula_proved,
    theorem_case,
    triangle_presentation,
)
from casson_invariants.invariants.report import (
    Caveat,
    InvariantReport,
    decompose_lambda_zero,
)

__all__ = [
    "BaseGeometry",
    "Caveat",
    "CharacterCensus",
    "InvariantReport",
    "TheoremCase",
    "Xi3Rule",
    "base_geometry",
    "bb_census",
    "decompose_lambda_zero",
    "h1_expr",
    "h1_small_seifert",
    "h1_twist_surgery",
    "lambda_psl_expr",
    "lambda_psl_seifert_hs",
    "lambda_psl_small_seifert",
    "lambda_psl_twist",
    "lambda_sl_expr",
    "lambda_sl_small_seifert",
    "sigma_pair",
    "sigma_triple",
    "small_seifert_presentation",
    "sl_formula_proved",
    "theorem_case",
    "triangle_presentation",
]
