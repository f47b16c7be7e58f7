"""
Unit tests for the two fractional approximation rules and the criterion
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootboard.core.exceptions import PreconditionError
from rootboard.utils.approx import (
    Rule,
    Winner,
    approximate,
    best_approximation,
    compare_rules,
    criterion_checks,
    criterion_sweep,
    measured_winner,
    select_rule,
)
from rootboard.utils.takht import root_and_remainder

pytestmark = pytest.mark.unit


def test_conventional_155():
    approx = approximate(155, Rule.CONVENTIONAL)
    assert approx.integer_part == 12
    assert approx.fraction == Fraction(11, 25)
    assert approx.value == 12 + Fraction(11, 25)


def test_rules_for_two():
    khwarizmi = approximate(2, Rule.KHWARIZMI)
    conventional = approximate(2, Rule.CONVENTIONAL)
    assert khwarizmi.value == Fraction(3, 2)
    assert conventional.value == Fraction(4, 3)
    assert khwarizmi.square == Fraction(9, 4)
    assert conventional.square == Fraction(16, 9)


def test_rules_for_ten():
    assert approximate(10, Rule.KHWARIZMI).value == Fraction(19, 6)
    assert approximate(10, Rule.CONVENTIONAL).value == Fraction(22, 7)
    assert approximate(10, "khwarizmi").square == Fraction(361, 36)
    assert approximate(10, "conventional").square == Fraction(484, 49)


def test_perfect_square_has_zero_fraction():
    for rule in Rule:
        approx = approximate(9, rule)
        assert approx.integer_part == 3
        assert approx.fraction == 0


def test_khwarizmi_on_three_reaches_one():
    approx = approximate(3, Rule.KHWARIZMI)
    assert approx.fraction == 1
    assert approx.value == 2


def test_zero_input():
    with pytest.raises(PreconditionError):
        approximate(0, Rule.KHWARIZMI)
    assert approximate(0, Rule.CONVENTIONAL).value == 0
    with pytest.raises(PreconditionError):
        best_approximation(0)


class TestCompareRules:
    """Measured winner against the R <= E - 1 prediction"""

    def test_two(self):
        comparison = compare_rules(2)
        assert comparison.khwarizmi_square == Fraction(9, 4)
        assert comparison.conventional_square == Fraction(16, 9)
        assert comparison.khwarizmi_distance == Fraction(1, 4)
        assert comparison.conventional_distance == Fraction(2, 9)
        assert comparison.measured_winner is Winner.CONVENTIONAL
        assert comparison.predicted_winner is Winner.CONVENTIONAL
        assert comparison.agree
        assert comparison.historical_claim_holds

    def test_ten_is_a_counterexample_to_the_historical_claim(self):
        comparison = compare_rules(10)
        assert comparison.khwarizmi_distance == Fraction(1, 36)
        assert comparison.conventional_distance == Fraction(6, 49)
        assert comparison.measured_winner is Winner.KHWARIZMI
        assert comparison.predicted_winner is Winner.KHWARIZMI
        assert comparison.agree
        assert not comparison.historical_claim_holds

    def test_three(self):
        comparison = compare_rules(3)
        assert comparison.khwarizmi_square == 4
        assert comparison.conventional_square == Fraction(25, 9)
        assert comparison.measured_winner is Winner.CONVENTIONAL

    def test_perfect_square_is_a_tie(self):
        comparison = compare_rules(49)
        assert comparison.measured_winner is Winner.TIE
        assert comparison.predicted_winner is Winner.TIE
        assert comparison.agree


def test_select_rule_boundary():
    assert select_rule(3, 1) is Rule.KHWARIZMI
    assert select_rule(3, 2) is Rule.KHWARIZMI
    assert select_rule(3, 3) is Rule.CONVENTIONAL
    assert select_rule(1, 1) is Rule.CONVENTIONAL


def test_best_approximation():
    assert best_approximation(10).rule is Rule.KHWARIZMI
    assert best_approximation(2).rule is Rule.CONVENTIONAL
    assert best_approximation(155).value == 12 + Fraction(11, 25)


@given(st.integers(min_value=2, max_value=10 ** 12))
def test_integer_winner_matches_rational_comparison(n):
    root, remainder = root_and_remainder(n)
    if remainder == 0:
        assert measured_winner(n, root, remainder) is Winner.TIE
        return
    comparison = compare_rules(n)
    assert measured_winner(n, root, remainder) is comparison.measured_winner
    assert comparison.measured_winner is not Winner.TIE
    assert comparison.agree


def test_criterion_sweep_small():
    sweep = criterion_sweep(2, 20000)
    assert sweep.passed
    assert sweep.squares_skipped == 140
    assert sweep.checked + sweep.squares_skipped == 19999


def test_criterion_sweep_bounds():
    with pytest.raises(PreconditionError):
        criterion_sweep(10, 2)
    with pytest.raises(PreconditionError):
        criterion_sweep(0, 2)


@pytest.mark.slow
def test_criterion_sweep_to_one_million():
    sweep = criterion_sweep(2, 10 ** 6)
    assert sweep.passed
    assert sweep.violations == ()


def test_rules_bracket_every_non_square():
    for n in range(2, 10 ** 4 + 1):
        root, remainder = root_and_remainder(n)
        if remainder == 0:
            continue
        assert approximate(n, Rule.CONVENTIONAL).square < n < approximate(n, Rule.KHWARIZMI).square


@given(st.integers(min_value=1, max_value=10 ** 15))
def test_khwarizmi_excess_is_the_square_of_its_fraction(n):
    approx = approximate(n, Rule.KHWARIZMI)
    root, remainder = root_and_remainder(n)
    assert approx.fraction == Fraction(remainder, 2 * root)
    assert approx.square - n == approx.fraction ** 2


def test_criterion_checks_skip_squares():
    checks = list(criterion_checks(2, 11))
    assert [check.n for check in checks] == [2, 3, 5, 6, 7, 8, 10, 11]
    ten = checks[-2]
    assert (ten.integer_part, ten.remainder) == (3, 1)
    assert ten.predicted_winner is Winner.KHWARIZMI
    assert ten.agree
    with pytest.raises(PreconditionError):
        list(criterion_checks(0, 5))
