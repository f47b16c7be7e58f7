"""
Exact-rational Newton iteration for sqrt(a)
u_{n+1} = (u_n^2 + a) / (2 u_n), every iterate kept as a reduced fraction,
plus a harness comparing it with the dust-board fixed-point root
"""

from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, model_validator

from rootboard.core.config import settings
from rootboard.core.exceptions import PreconditionError
from rootboard.utils.digits import ensure_natural, ensure_rational
from rootboard.utils.scale import FixedPoint, decimal_expansion

logger = structlog.get_logger(__name__)

PRECISION_METRIC = "|value^2 - a|"


class NewtonState(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    iterate: Fraction
    step: int = 0
    target: int

    @model_validator(mode="after")
    def validate_state(self) -> "NewtonState":
        if self.iterate < 0:
            raise ValueError("iterate must be non-negative")
        if self.target < 0 or self.step < 0:
            raise ValueError("target and step must be natural numbers")
        return self

    @property
    def error(self) -> Fraction:
        """u^2 - a, signed"""
        return self.iterate * self.iterate - self.target


def newton_step(state: NewtonState) -> NewtonState:
    """One exact update"""
    u = state.iterate
    if u == 0:
        raise PreconditionError("Newton step from a zero iterate")
    return NewtonState(
        iterate=(u * u + state.target) / (2 * u),
        step=state.step + 1,
        target=state.target,
    )


def correct_leading_digits(value: Fraction, reference: FixedPoint) -> int:
    """Leading decimal digits of value (truncated) that agree with the reference root"""
    scale = 10 ** reference.places
    candidate = str(value.numerator * scale // value.denominator)
    expected = str(reference.scaled_root)
    count = 0
    for got, want in zip(candidate, expected):
        if got != want:
            break
        count += 1
    if len(candidate) != len(expected):
        # A different number of integer digits means no digit is in place
        return 0
    return count


class NewtonRun(BaseModel):
    """Every iterate u_0 .. u_k, exact"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    target: int
    initial: Fraction
    tolerance: Fraction
    max_steps: int
    iterates: Tuple[Fraction, ...]
    correct_digits: Tuple[int, ...]
    converged: bool
    reference: FixedPoint

    @property
    def steps(self) -> int:
        return len(self.iterates) - 1

    @property
    def final(self) -> Fraction:
        return self.iterates[-1]

    @property
    def errors(self) -> Tuple[Fraction, ...]:
        return tuple(u * u - self.target for u in self.iterates)


def _resolve_max_steps(max_steps: Optional[int]) -> int:
    cap = settings.NEWTON_MAX_STEPS
    if max_steps is None:
        return cap
    ensure_natural(max_steps, "max_steps")
    if max_steps > cap:
        raise PreconditionError(f"max_steps {max_steps} exceeds the cap of {cap}")
    return max_steps


def newton_run(
    a: int,
    u0: Optional[Fraction] = None,
    max_steps: Optional[int] = None,
    tolerance: Optional[Fraction] = None,
    reference_places: Optional[int] = None,
) -> NewtonRun:
    """Iterate from u0 (default a) until |u_n^2 - a| <= tolerance or max_steps"""
    ensure_natural(a, "a")
    if a < 1:
        raise PreconditionError("Newton runs need a >= 1")
    initial = ensure_rational(a if u0 is None else u0, "u0")
    if initial == 0:
        raise PreconditionError("u0 must be positive")
    tolerance = ensure_rational(settings.newton_tolerance if tolerance is None else tolerance, "tolerance")
    steps = _resolve_max_steps(max_steps)
    reference = decimal_expansion(a, reference_places or settings.NEWTON_REFERENCE_PLACES)

    state = NewtonState(iterate=initial, step=0, target=a)
    iterates = [state.iterate]
    converged = abs(state.error) <= tolerance
    while not converged and state.step < steps:
        state = newton_step(state)
        iterates.append(state.iterate)
        converged = abs(state.error) <= tolerance

    run = NewtonRun(
        target=a,
        initial=initial,
        tolerance=tolerance,
        max_steps=steps,
        iterates=tuple(iterates),
        correct_digits=tuple(correct_leading_digits(u, reference) for u in iterates),
        converged=converged,
        reference=reference,
    )
    logger.debug("newton.run_finished", a=a, steps=run.steps, converged=converged)
    return run


def iterate_newton(a: int, steps: int, u0: Optional[Fraction] = None) -> Fraction:
    """u_steps from u0 (default a), no stopping rule; steps share the newton_run cap"""
    ensure_natural(a, "a")
    steps = _resolve_max_steps(steps)
    if a < 1:
        raise PreconditionError("Newton runs need a >= 1")
    initial = ensure_rational(a if u0 is None else u0, "u0")
    if initial == 0:
        raise PreconditionError("u0 must be positive")
    state = NewtonState(iterate=initial, step=0, target=a)
    for _ in range(steps):
        if state.error == 0:
            break
        state = newton_step(state)
    return state.iterate


def monotone_from_above(run: NewtonRun) -> bool:
    """From u0^2 >= a the iterates never increase and stay at or above sqrt(a)"""
    if run.initial * run.initial < run.target:
        # Only u_1 onwards is guaranteed to be above the root
        iterates = run.iterates[1:]
    else:
        iterates = run.iterates
    if any(u * u < run.target for u in iterates):
        return False
    return all(later <= earlier for earlier, later in zip(iterates, iterates[1:]))


def quadratic_shrink_holds(run: NewtonRun) -> bool:
    """Whenever u_n^2 - a <= 1 (and u_n^2 >= a), u_{n+1}^2 - a <= (u_n^2 - a)^2 / (4a)"""
    errors = run.errors
    for current, following in zip(errors, errors[1:]):
        if 0 <= current <= 1 and following > current * current / (4 * run.target):
            return False
    return True


class MethodWinner(str, Enum):
    TAKHT = "takht"
    NEWTON = "newton"
    TIE = "tie"


class MethodComparison(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: int
    places: int
    newton_steps: int
    takht: FixedPoint
    takht_distance: Fraction
    newton_iterate: Fraction
    newton_distance: Fraction
    winner: MethodWinner
    metric: str = PRECISION_METRIC

    @property
    def takht_value(self) -> Fraction:
        return self.takht.value


def compare_methods(
    a: int, p: int, newton_steps: int, u0: Optional[Fraction] = None
) -> MethodComparison:
    """Dust-board root to p places against the Newton iterate after newton_steps"""
    ensure_natural(a, "a")
    if a < 1:
        raise PreconditionError("Comparisons need a >= 1")
    takht = decimal_expansion(a, p)
    takht_distance = abs(takht.value * takht.value - a)
    iterate = iterate_newton(a, newton_steps, u0)
    newton_distance = abs(iterate * iterate - a)

    if takht_distance < newton_distance:
        winner = MethodWinner.TAKHT
    elif newton_distance < takht_distance:
        winner = MethodWinner.NEWTON
    else:
        winner = MethodWinner.TIE

    return MethodComparison(
        a=a,
        places=p,
        newton_steps=newton_steps,
        takht=takht,
        takht_distance=takht_distance,
        newton_iterate=iterate,
        newton_distance=newton_distance,
        winner=winner,
    )
