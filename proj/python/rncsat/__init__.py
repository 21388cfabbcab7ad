from ._rncsat import (
    Formula,
    FormulaParseError,
    RncError,
    evaluate,
    gen_random,
    is_horn_nc,
    is_negative,
    lp_query,
    oracle_sat,
    parse,
    print_formula,
    simplify_constants,
    solve,
    to_clausal,
)

__all__ = [
    "Formula",
    "FormulaParseError",
    "RncError",
    "evaluate",
    "gen_random",
    "is_horn_nc",
    "is_negative",
    "lp_query",
    "oracle_sat",
    "parse",
    "print_formula",
    "simplify_constants",
    "solve",
    "to_clausal",
]
