"""
Necessary-condition checks on claimed roots
Casting out nines and the unit-digit table of perfect squares. A failed check
proves an error; a passing check proves nothing.
"""

from enum import Enum
from typing import Dict, FrozenSet, Optional, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field, model_validator

from rootboard.core.exceptions import PreconditionError
from rootboard.utils.digits import ensure_natural

logger = structlog.get_logger(__name__)

# Unit digit of a perfect square -> possible unit digits of its root
UNIT_DIGIT_TABLE: Dict[int, FrozenSet[int]] = {
    0: frozenset({0}),
    1: frozenset({1, 9}),
    4: frozenset({2, 8}),
    5: frozenset({5}),
    6: frozenset({4, 6}),
    9: frozenset({3, 7}),
}
SQUARE_UNIT_DIGITS = frozenset(UNIT_DIGIT_TABLE)
SQUARE_RESIDUES_MOD9 = frozenset({0, 1, 4, 7})


class Outcome(str, Enum):
    REFUTED = "refuted"
    CONSISTENT = "consistent (mod 9)"


def digit_sum(n: int) -> int:
    return sum(int(c) for c in str(n))


def mod9(n: int) -> int:
    """n mod 9 by summing decimal digits until one digit is left (9 counts as 0)"""
    ensure_natural(n, "n")
    while n >= 10:
        n = digit_sum(n)
    return 0 if n == 9 else n


class VerificationReport(BaseModel):
    """a = N mod 9, b = root^2 mod 9, c = remainder mod 9; passed iff a = b + c mod 9"""

    model_config = ConfigDict(frozen=True)

    n: int
    root: int
    remainder: int
    residue_n: int = Field(..., ge=0, le=8)
    residue_root_sq: int = Field(..., ge=0, le=8)
    residue_remainder: int = Field(..., ge=0, le=8)
    passed: bool
    necessary_only: bool = True
    unit_digit_consistent: Optional[bool] = None

    @model_validator(mode="after")
    def validate_passed(self) -> "VerificationReport":
        expected = (self.residue_root_sq + self.residue_remainder) % 9 == self.residue_n
        if self.passed != expected:
            raise ValueError("passed must agree with a = b + c (mod 9)")
        if not self.necessary_only:
            raise ValueError("Casting out nines is a necessary condition only")
        return self

    @property
    def outcome(self) -> Outcome:
        return Outcome.CONSISTENT if self.passed else Outcome.REFUTED

    @property
    def verdict(self) -> str:
        """The manuscript's own vocabulary"""
        return "correspond" if self.passed else "ne correspond pas"


def check_root(n: int, root: int, remainder: int = 0) -> VerificationReport:
    """Cast out nines on the claim n = root^2 + remainder"""
    ensure_natural(n, "n")
    ensure_natural(root, "root")
    ensure_natural(remainder, "remainder")

    a = mod9(n)
    b = mod9(mod9(root) ** 2)
    c = mod9(remainder)
    passed = mod9(b + c) == a

    unit_consistent = None
    if remainder == 0:
        unit_consistent = root % 10 in unit_digit_candidates(n % 10)

    report = VerificationReport(
        n=n,
        root=root,
        remainder=remainder,
        residue_n=a,
        residue_root_sq=b,
        residue_remainder=c,
        passed=passed,
        unit_digit_consistent=unit_consistent,
    )
    if not passed:
        logger.warning("verify.refuted", n=n, root=root, remainder=remainder, a=a, b=b, c=c)
    return report


def unit_digit_candidates(square_unit: int) -> FrozenSet[int]:
    """Unit digits a root may have when its square ends in square_unit"""
    ensure_natural(square_unit, "square_unit")
    if square_unit > 9:
        raise PreconditionError(f"Not a decimal digit: {square_unit}")
    return UNIT_DIGIT_TABLE.get(square_unit, frozenset())


class SquareScreening(BaseModel):
    """possible=True means only 'not excluded by the digit and mod 9 tables'"""

    model_config = ConfigDict(frozen=True)

    n: int
    unit_digit: int
    residue: int
    possible: bool
    reasons: Tuple[str, ...] = ()
    root_unit_candidates: Tuple[int, ...] = ()


def is_possible_square(n: int) -> SquareScreening:
    """Screen n against the unit-digit and mod 9 criteria for perfect squares"""
    ensure_natural(n, "n")
    unit = n % 10
    residue = mod9(n)
    reasons = []
    if unit not in SQUARE_UNIT_DIGITS:
        reasons.append(f"unit digit {unit} is not one of 0, 1, 4, 5, 6, 9")
    if residue not in SQUARE_RESIDUES_MOD9:
        reasons.append(f"residue {residue} mod 9 is not one of 0, 1, 4, 7")

    return SquareScreening(
        n=n,
        unit_digit=unit,
        residue=residue,
        possible=not reasons,
        reasons=tuple(reasons),
        root_unit_candidates=tuple(sorted(unit_digit_candidates(unit))),
    )
