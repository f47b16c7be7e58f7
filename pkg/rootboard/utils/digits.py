"""
Exact arithmetic substrate
Naturals are Python ints, rationals are fractions.Fraction; DigitString is the
big-endian base-10 view the dust-board engine works on
"""

from enum import Enum
from fractions import Fraction
from typing import Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from rootboard.core.exceptions import PreconditionError


def ensure_natural(value: int, name: str = "value") -> int:
    """Reject anything that is not a non-negative int"""
    if isinstance(value, bool) or not isinstance(value, int):
        raise PreconditionError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise PreconditionError(f"{name} must be a natural number, got {value}")
    return value


def natural_sub(a: int, b: int) -> int:
    """Subtraction on naturals; underflow is an error"""
    if b > a:
        raise PreconditionError(f"Subtraction underflow: {a} - {b}")
    return a - b


def ensure_rational(value, name: str = "value") -> Fraction:
    """Coerce to a non-negative Fraction (ints are accepted)"""
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise PreconditionError(f"{name} must be an exact rational, got {type(value).__name__}")
    q = Fraction(value)
    if q < 0:
        raise PreconditionError(f"{name} must be non-negative, got {q}")
    return q


class DigitString(BaseModel):
    """Base-10 digits, most significant first"""

    model_config = ConfigDict(frozen=True)

    digits: Tuple[int, ...]
    padded: bool = False

    @field_validator("digits")
    @classmethod
    def validate_digits(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if not v:
            raise ValueError("A digit string needs at least one digit")
        if any(d < 0 or d > 9 for d in v):
            raise ValueError("Every digit must lie in 0..9")
        return v

    @model_validator(mode="after")
    def validate_canonical(self) -> "DigitString":
        if not self.padded and len(self.digits) > 1 and self.digits[0] == 0:
            raise ValueError("Leading zero on an unpadded digit string")
        return self

    @property
    def value(self) -> int:
        return int("".join(map(str, self.digits)))

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return "".join(map(str, self.digits))


def to_digits(n: int) -> DigitString:
    """Decimal decomposition of n"""
    ensure_natural(n, "n")
    return DigitString(digits=tuple(int(c) for c in str(n)))


def digits_to_value(d: DigitString) -> int:
    """Sum of 10^i * n_i over the digit string"""
    value = 0
    for digit in d.digits:
        value = value * 10 + digit
    return value


def pad_to_even(d: DigitString) -> DigitString:
    """Prepend one zero when the digit count is odd"""
    if len(d) % 2 == 0:
        return d
    return DigitString(digits=(0,) + d.digits, padded=True)


def rational_square(q: Fraction) -> Fraction:
    """Exact square, in lowest terms"""
    q = ensure_rational(q, "q")
    return q * q


class Ordering(str, Enum):
    """Which of two rationals lies closer to a target"""

    FIRST = "first"
    SECOND = "second"
    TIE = "tie"


def rational_compare_distance(q1: Fraction, q2: Fraction, target: int) -> Ordering:
    """Compare |q1 - target| against |q2 - target| exactly"""
    q1 = ensure_rational(q1, "q1")
    q2 = ensure_rational(q2, "q2")
    ensure_natural(target, "target")
    d1 = abs(q1 - target)
    d2 = abs(q2 - target)
    if d1 < d2:
        return Ordering.FIRST
    if d2 < d1:
        return Ordering.SECOND
    return Ordering.TIE


def format_rational(q: Fraction) -> str:
    """Exact 'num/den' form; integers print without a denominator"""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_mixed(q: Fraction) -> str:
    """Mixed-number form 'E + R/D' for rationals >= 1"""
    whole, rest = divmod(q.numerator, q.denominator)
    if rest == 0:
        return str(whole)
    if whole == 0:
        return f"{rest}/{q.denominator}"
    return f"{whole} + {rest}/{q.denominator}"


def format_fixed_point(scaled: int, places: int) -> str:
    """Render scaled / 10^places with an explicit decimal point"""
    ensure_natural(scaled, "scaled")
    whole, frac = divmod(scaled, 10 ** places)
    return f"{whole}.{frac:0{places}d}"


def format_truncated_decimal(q: Fraction, places: int) -> str:
    """Decimal rendering of q truncated (never rounded) to the given places"""
    q = ensure_rational(q, "q")
    scaled = q.numerator * 10 ** places // q.denominator
    return format_fixed_point(scaled, places)
