"""End-to-end smoke tests for the python module."""

from fractions import Fraction

import pytest

import dltl

TWO_BRANCH_MODEL = """
aps: a b
state: s0 init a=1 b=0
state: s1 a=0 b=1
trans: s0 s0
trans: s0 s1
trans: s1 s1
"""

CHAIN_MODEL = """
aps: a b
state: s0 init a=1 b=0
state: s1 a=0 b=1
trans: s0 s1
trans: s1 s1
"""


def test_eval_exact_discounted_until():
    assert dltl.eval_lasso("a=1 a=1 a=1 ; a=0", "a U{exp(1/2)} !a") == "1/8"
    assert dltl.eval_value("a=1 a=1 a=1 ; a=0", "a U{exp(1/2)} !a") == Fraction(1, 8)


def test_eval_tend_limit():
    assert dltl.eval_value("p=0 ; p=0", "true O{exp(1/2),1/2} p") == Fraction(1, 2)


def test_check_holds_and_violated():
    holds, cex, value = dltl.check_at_least(TWO_BRANCH_MODEL, "a | b", "1")
    assert holds and cex is None and value is None

    holds, cex, value = dltl.check_at_least(TWO_BRANCH_MODEL, "F{exp(1/2)} b", "1/2")
    assert not holds
    assert Fraction(value) < Fraction(1, 2)
    assert dltl.eval_lasso(cex, "F{exp(1/2)} b") == value


def test_satisfiable_above():
    witness = dltl.satisfiable_above("F{exp(1/2)} p", "1/4")
    assert witness is not None
    lasso, value = witness
    assert Fraction(value) > Fraction(1, 4)
    assert dltl.satisfiable_above("p & !p", "0") is None


def test_value_interval_brackets_half():
    lo, hi = dltl.value_interval(CHAIN_MODEL, "F{exp(1/2)} b", "1/32")
    assert lo <= Fraction(1, 2) <= hi
    assert hi - lo <= Fraction(1, 32)


def test_translate_is_deterministic():
    first = dltl.translate("F{exp(1/2)} p", "1/8")
    second = dltl.translate("F{exp(1/2)} p", "1/8")
    assert first == second
    assert "awa states=" in first and "nba states=" in first


def test_pretty_round_trip():
    text = dltl.pretty("F p & G q")
    assert dltl.pretty(text) == text


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        dltl.eval_lasso("p=1 ; p=1", "p U")
