"""Conditional expressions under valuation congruences."""

from ._hmalab import (
    BudgetExhausted,
    ConstraintViolation,
    GuardViolation,
    SyntaxError,
    atoms,
    canonical_equiv,
    count_core,
    count_mem,
    critical_pairs,
    equiv,
    evaluate,
    mem_basic_forms,
    normalize,
    parse,
    profile,
    query_bound,
    rewrite,
    sugar,
    weight,
)

__all__ = [
    "BudgetExhausted",
    "ConstraintViolation",
    "GuardViolation",
    "SyntaxError",
    "atoms",
    "canonical_equiv",
    "count_core",
    "count_mem",
    "critical_pairs",
    "equiv",
    "evaluate",
    "mem_basic_forms",
    "normalize",
    "parse",
    "profile",
    "query_bound",
    "rewrite",
    "sugar",
    "weight",
]
