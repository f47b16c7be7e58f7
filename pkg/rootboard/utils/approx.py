"""
Fractional approximation of square roots of non-squares
For N = E^2 + R the remainder is attributed either to 2E (al-Khwarizmi) or to
2E + 1 (the conventional rule). "Better" means the square of the approximation
lies closer to N; no irrational arithmetic is involved anywhere.
"""

from enum import Enum
from fractions import Fraction
from typing import Iterator, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, model_validator

from rootboard.core.exceptions import PreconditionError
from rootboard.utils.digits import Ordering, ensure_natural, rational_compare_distance, rational_square
from rootboard.utils.takht import isqrt, root_and_remainder

logger = structlog.get_logger(__name__)


class Rule(str, Enum):
    """Where the remainder goes"""

    KHWARIZMI = "khwarizmi"  # R / (2E)
    CONVENTIONAL = "conventional"  # R / (2E + 1)


class Winner(str, Enum):
    KHWARIZMI = "khwarizmi"
    CONVENTIONAL = "conventional"
    TIE = "tie"


class Approximation(BaseModel):
    """E + r with r exact"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    integer_part: int
    fraction: Fraction
    rule: Rule

    @model_validator(mode="after")
    def validate_fraction(self) -> "Approximation":
        # R = 2E under al-Khwarizmi's rule gives exactly 1 (N = 3 -> 1 + 1)
        if not 0 <= self.fraction <= 1:
            raise ValueError("fraction must lie in [0, 1]")
        return self

    @property
    def value(self) -> Fraction:
        return self.integer_part + self.fraction

    @property
    def square(self) -> Fraction:
        return rational_square(self.value)


def _fraction_for(rule: Rule, root: int, remainder: int) -> Fraction:
    if rule is Rule.KHWARIZMI:
        if root == 0:
            raise PreconditionError("al-Khwarizmi's rule divides by 2E and needs n >= 1")
        return Fraction(remainder, 2 * root)
    return Fraction(remainder, 2 * root + 1)


def approximate(n: int, rule: Rule) -> Approximation:
    """E + R/(2E) or E + R/(2E+1) where E = isqrt(n).root"""
    ensure_natural(n, "n")
    rule = Rule(rule)
    result = isqrt(n)
    fraction = _fraction_for(rule, result.root, result.remainder)
    return Approximation(integer_part=result.root, fraction=fraction, rule=rule)


def select_rule(root: int, remainder: int) -> Rule:
    """R <= E - 1 favours al-Khwarizmi, R >= E the conventional rule"""
    if remainder <= root - 1:
        return Rule.KHWARIZMI
    return Rule.CONVENTIONAL


def best_approximation(n: int) -> Approximation:
    """Approximation under the rule the criterion selects for n"""
    ensure_natural(n, "n")
    if n == 0:
        raise PreconditionError("n must be at least 1")
    result = isqrt(n)
    rule = select_rule(result.root, result.remainder)
    return Approximation(
        integer_part=result.root,
        fraction=_fraction_for(rule, result.root, result.remainder),
        rule=rule,
    )


class RuleComparison(BaseModel):
    """Both rules side by side, measured against the criterion's prediction"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    integer_part: int
    remainder: int
    khwarizmi: Approximation
    conventional: Approximation
    khwarizmi_distance: Fraction
    conventional_distance: Fraction
    measured_winner: Winner
    predicted_winner: Winner
    agree: bool
    historical_claim_holds: bool

    @property
    def khwarizmi_square(self) -> Fraction:
        return self.khwarizmi.square

    @property
    def conventional_square(self) -> Fraction:
        return self.conventional.square


def compare_rules(n: int) -> RuleComparison:
    """Square both approximations, measure |square - n| and check the criterion"""
    ensure_natural(n, "n")
    if n == 0:
        raise PreconditionError("n must be at least 1")

    result = isqrt(n)
    root, remainder = result.root, result.remainder
    khwarizmi = Approximation(
        integer_part=root, fraction=_fraction_for(Rule.KHWARIZMI, root, remainder), rule=Rule.KHWARIZMI
    )
    conventional = Approximation(
        integer_part=root,
        fraction=_fraction_for(Rule.CONVENTIONAL, root, remainder),
        rule=Rule.CONVENTIONAL,
    )

    ordering = rational_compare_distance(khwarizmi.square, conventional.square, n)
    measured = {
        Ordering.FIRST: Winner.KHWARIZMI,
        Ordering.SECOND: Winner.CONVENTIONAL,
        Ordering.TIE: Winner.TIE,
    }[ordering]

    if remainder == 0:
        predicted = Winner.TIE
    else:
        predicted = Winner(select_rule(root, remainder).value)

    comparison = RuleComparison(
        n=n,
        integer_part=root,
        remainder=remainder,
        khwarizmi=khwarizmi,
        conventional=conventional,
        khwarizmi_distance=abs(khwarizmi.square - n),
        conventional_distance=abs(conventional.square - n),
        measured_winner=measured,
        predicted_winner=predicted,
        agree=measured == predicted,
        historical_claim_holds=measured != Winner.KHWARIZMI,
    )
    if not comparison.agree:
        logger.warning("approx.criterion_disagrees", n=n, measured=measured.value, predicted=predicted.value)
    return comparison


def measured_winner(n: int, root: int, remainder: int) -> Winner:
    """
    Integer-only version of the squared-distance comparison:
    R^2 / (4E^2) against |n - ((E(2E+1) + R) / (2E+1))^2|, cross-multiplied
    """
    if remainder == 0:
        return Winner.TIE
    d = 2 * root + 1
    conventional_gap = abs(n * d * d - (root * d + remainder) ** 2)
    left = remainder * remainder * d * d
    right = 4 * root * root * conventional_gap
    if left < right:
        return Winner.KHWARIZMI
    if right < left:
        return Winner.CONVENTIONAL
    return Winner.TIE


class CriterionCheck(BaseModel):
    """Predicted and measured winner for one non-square n"""

    model_config = ConfigDict(frozen=True)

    n: int
    integer_part: int
    remainder: int
    predicted_winner: Winner
    measured_winner: Winner

    @property
    def agree(self) -> bool:
        return self.predicted_winner == self.measured_winner


class CriterionSweep(BaseModel):
    """Outcome of checking the criterion over an inclusive range"""

    model_config = ConfigDict(frozen=True)

    start: int
    stop: int
    checked: int
    squares_skipped: int
    violations: Tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations


def criterion_checks(start: int, stop: int) -> Iterator[CriterionCheck]:
    """Yield the criterion's prediction and the measured winner for every non-square in range"""
    ensure_natural(start, "start")
    ensure_natural(stop, "stop")
    if start < 1 or start > stop:
        raise PreconditionError(f"Invalid sweep bounds {start}..{stop}")

    for n in range(start, stop + 1):
        root, remainder = root_and_remainder(n)
        if remainder == 0:
            continue
        yield CriterionCheck(
            n=n,
            integer_part=root,
            remainder=remainder,
            predicted_winner=Winner(select_rule(root, remainder).value),
            measured_winner=measured_winner(n, root, remainder),
        )


def criterion_sweep(start: int, stop: int) -> CriterionSweep:
    """Check R <= E - 1 / R >= E against the measured winner for every non-square in range"""
    checked = 0
    violations = []
    for check in criterion_checks(start, stop):
        checked += 1
        if not check.agree:
            violations.append(check.n)

    logger.info(
        "approx.criterion_sweep",
        start=start,
        stop=stop,
        checked=checked,
        violations=len(violations),
    )
    return CriterionSweep(
        start=start,
        stop=stop,
        checked=checked,
        squares_skipped=stop - start + 1 - checked,
        violations=tuple(violations),
    )
