"""Threshold verification for linear temporal logic with discounting.

Thin convenience layer over the compiled extension: the core exchanges exact
rationals as strings; the helpers here return ``fractions.Fraction`` where a
numeric answer is the point of the call.
"""

from fractions import Fraction

from dltl._core import (
    ConsistencyError,
    FormulaParseError,
    ModelInputError,
    check_at_least,
    eval_lasso,
    pretty,
    satisfiable_above,
    translate,
    value_bounds,
)

__all__ = [
    "ConsistencyError",
    "FormulaParseError",
    "ModelInputError",
    "check_at_least",
    "eval_lasso",
    "eval_value",
    "pretty",
    "satisfiable_above",
    "translate",
    "value_bounds",
    "value_interval",
]


def eval_value(lasso: str, formula: str) -> Fraction:
    """Exact value of ``formula`` on the lasso word as a Fraction."""
    return Fraction(eval_lasso(lasso, formula))


def value_interval(model: str, formula: str, epsilon: str) -> tuple[Fraction, Fraction]:
    """Bracket of the model's value, both endpoints as Fractions."""
    lo, hi = value_bounds(model, formula, epsilon)
    return Fraction(lo), Fraction(hi)
