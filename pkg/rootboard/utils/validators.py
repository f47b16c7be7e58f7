"""
Validation utilities for decimal input
"""

import re
from fractions import Fraction

from rootboard.core.exceptions import ParseError

# Canonical naturals: "0" or a digit string without a leading zero
NATURAL_PATTERN = re.compile(r"(0|[1-9][0-9]*)")

# Exact fractions as typed on the command line: "7", "3/2", "1/1000000"
FRACTION_PATTERN = re.compile(r"(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?")


def validate_natural(text: str) -> bool:
    """Check that text is a canonical decimal natural"""
    if not text:
        return False
    return NATURAL_PATTERN.fullmatch(text) is not None


def parse_natural(text: str) -> int:
    """Parse a canonical decimal natural (ASCII digits, no sign, no leading zeros)"""
    if not validate_natural(text):
        raise ParseError(f"Not a canonical decimal natural: {text!r}")
    return int(text)


def parse_fraction(text: str) -> Fraction:
    """Parse a non-negative exact fraction written as 'n' or 'n/d'"""
    if not text:
        raise ParseError("Empty fraction")
    text = re.sub(r"\s", "", text)
    match = FRACTION_PATTERN.fullmatch(text)
    if match is None:
        raise ParseError(f"Not a non-negative fraction: {text!r}")
    numerator, denominator = match.groups()
    return Fraction(int(numerator), int(denominator or 1))
