"""
Root extraction after pre-multiplication
sqrt(A^(2p) * N) = A^p * sqrt(N): extract the integer root of the scaled
number and divide by A^p. With A = 10 the quotient is a fixed-point number
with p decimal places, which can be re-expressed in base 60.
"""

from fractions import Fraction
from typing import Tuple

import structlog
from pydantic import BaseModel, ConfigDict, Field, field_validator

from rootboard.core.exceptions import PreconditionError
from rootboard.utils.digits import ensure_natural, format_fixed_point
from rootboard.utils.takht import isqrt

logger = structlog.get_logger(__name__)


class ScalingSpec(BaseModel):
    """Multiply N by A, 2p times"""

    model_config = ConfigDict(frozen=True)

    base: int = Field(..., ge=2)
    exponent_pairs: int = Field(..., ge=1)

    @classmethod
    def of(cls, base: int, exponent_pairs: int) -> "ScalingSpec":
        ensure_natural(base, "base")
        ensure_natural(exponent_pairs, "exponent_pairs")
        if base < 2:
            raise PreconditionError(f"Scaling base must be at least 2, got {base}")
        if exponent_pairs < 1:
            raise PreconditionError(f"Exponent pairs must be at least 1, got {exponent_pairs}")
        return cls(base=base, exponent_pairs=exponent_pairs)

    @property
    def divisor(self) -> int:
        """A^p"""
        return self.base ** self.exponent_pairs

    @property
    def multiplier(self) -> int:
        """A^(2p)"""
        return self.divisor ** 2


class ScaledRoot(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    spec: ScalingSpec
    scaled_n: int
    scaled_root: int
    scaled_remainder: int
    value: Fraction

    @property
    def is_exact(self) -> bool:
        return self.scaled_remainder == 0


def scaled_isqrt(n: int, spec: ScalingSpec) -> ScaledRoot:
    """isqrt(A^(2p) * n).root / A^p, reduced"""
    ensure_natural(n, "n")
    spec = ScalingSpec.of(spec.base, spec.exponent_pairs)
    scaled_n = spec.multiplier * n
    result = isqrt(scaled_n)
    logger.debug(
        "scale.extracted",
        base=spec.base,
        pairs=spec.exponent_pairs,
        scaled_root=result.root,
        scaled_remainder=result.remainder,
    )
    return ScaledRoot(
        n=n,
        spec=spec,
        scaled_n=scaled_n,
        scaled_root=result.root,
        scaled_remainder=result.remainder,
        value=Fraction(result.root, spec.divisor),
    )


class FixedPoint(BaseModel):
    """scaled_root / 10^places, truncated"""

    model_config = ConfigDict(frozen=True)

    n: int
    places: int = Field(..., ge=1)
    scaled_root: int
    remainder: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.scaled_root, 10 ** self.places)

    @property
    def integer_part(self) -> int:
        return self.scaled_root // 10 ** self.places

    @property
    def fractional_digits(self) -> str:
        return f"{self.scaled_root % 10 ** self.places:0{self.places}d}"

    def __str__(self) -> str:
        return format_fixed_point(self.scaled_root, self.places)


def decimal_expansion(n: int, p: int) -> FixedPoint:
    """sqrt(n) to p decimal places by extracting the root of n * 10^(2p)"""
    ensure_natural(p, "p")
    if p < 1:
        raise PreconditionError(f"p must be at least 1, got {p}")
    scaled = scaled_isqrt(n, ScalingSpec.of(10, p))
    return FixedPoint(
        n=n,
        places=p,
        scaled_root=scaled.scaled_root,
        remainder=scaled.scaled_remainder,
    )


class SexagesimalStep(BaseModel):
    """residue * 60 = place * 10^p + next residue"""

    model_config = ConfigDict(frozen=True)

    product: int
    place: int
    residue: int


class SexagesimalExpansion(BaseModel):
    """Integer part plus minutes, seconds, tierces, ..."""

    model_config = ConfigDict(frozen=True)

    integer_part: int
    places: Tuple[int, ...]
    truncated: bool
    source_places: int
    chain: Tuple[SexagesimalStep, ...] = ()

    @field_validator("places")
    @classmethod
    def validate_places(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(place < 0 or place > 59 for place in v):
            raise ValueError("Every sexagesimal place must lie in 0..59")
        return v

    @property
    def value(self) -> Fraction:
        total = Fraction(self.integer_part)
        for i, place in enumerate(self.places, start=1):
            total += Fraction(place, 60 ** i)
        return total

    def __str__(self) -> str:
        return f"{self.integer_part};" + ",".join(str(place) for place in self.places)


def to_sexagesimal(root: FixedPoint, depth: int) -> SexagesimalExpansion:
    """
    Split off the integer part, then repeatedly multiply the residue by 60 and
    take the quotient by 10^p as the next place. The residue stays below 10^p,
    so each quotient stays below 60.
    """
    ensure_natural(depth, "depth")
    if depth < 1:
        raise PreconditionError(f"depth must be at least 1, got {depth}")

    unit = 10 ** root.places
    integer_part, residue = divmod(root.scaled_root, unit)
    places = []
    chain = []
    for _ in range(depth):
        product = residue * 60
        place, residue = divmod(product, unit)
        places.append(place)
        chain.append(SexagesimalStep(product=product, place=place, residue=residue))

    return SexagesimalExpansion(
        integer_part=integer_part,
        places=tuple(places),
        truncated=residue != 0,
        source_places=root.places,
        chain=tuple(chain),
    )
