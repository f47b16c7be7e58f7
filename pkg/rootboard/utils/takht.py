"""
Dust-board square root extraction
Digit pairs are consumed from the left; at each step the largest digit s with
s * (2 * prefix, s) not exceeding the residual window is placed, subtracted,
doubled and shifted one place right. Boards are recorded after each
subtract-and-shift, the way the board would have looked at that moment.
"""

from typing import List, Optional, Tuple

import structlog
from pydantic import BaseModel, ConfigDict, model_validator

from rootboard.core.exceptions import CorruptTraceError
from rootboard.utils.digits import DigitString, ensure_natural, pad_to_even, to_digits

logger = structlog.get_logger(__name__)


class TakhtBoard(BaseModel):
    """Board state after one step; positions index the even-padded digits of N"""

    model_config = ConfigDict(frozen=True)

    step_index: int
    remainder_row: DigitString
    work_row: DigitString
    offset: int
    chosen_digit: int
    window: int
    final: bool = False

    @model_validator(mode="after")
    def validate_geometry(self) -> "TakhtBoard":
        if self.offset < 0 or self.offset + len(self.work_row) > len(self.remainder_row):
            raise ValueError("Work row does not fit under the remainder row")
        return self

    @property
    def residual(self) -> int:
        return self.remainder_row.value

    @property
    def work_value(self) -> int:
        return self.work_row.value


class IsqrtResult(BaseModel):
    """N = root^2 + remainder with 0 <= remainder <= 2 * root"""

    model_config = ConfigDict(frozen=True)

    n: int
    root: int
    remainder: int
    trace: Tuple[TakhtBoard, ...] = ()
    zero_shortcut_used: bool = False
    shortcut_zeros: int = 0

    @model_validator(mode="after")
    def validate_decomposition(self) -> "IsqrtResult":
        if self.root * self.root + self.remainder != self.n:
            raise ValueError("root^2 + remainder must equal n")
        if not 0 <= self.remainder <= 2 * self.root:
            raise ValueError("remainder must lie in 0..2*root")
        return self

    @property
    def is_perfect_square(self) -> bool:
        return self.remainder == 0


def _largest_digit(base: int, window: int) -> int:
    """Largest s in 0..9 with s * (base + s) <= window, scanning down from 9"""
    for s in range(9, -1, -1):
        if s * (base + s) <= window:
            return s
    return 0


def _board(
    step: int,
    width: int,
    residual: int,
    work: int,
    rightmost: int,
    digit: int,
    window: int,
    final: bool,
) -> TakhtBoard:
    work_row = to_digits(work)
    return TakhtBoard(
        step_index=step,
        remainder_row=DigitString(
            digits=tuple(int(c) for c in f"{residual:0{width}d}"), padded=True
        ),
        work_row=work_row,
        offset=rightmost - len(work_row) + 1,
        chosen_digit=digit,
        window=window,
        final=final,
    )


def _extract(
    n: int, digits: Tuple[int, ...], trace_enabled: bool, shortcut: bool
) -> Tuple[int, int, List[TakhtBoard], int]:
    """Run the board over even-padded digits; returns (root, remainder, trace, zeros)"""
    width = len(digits)
    pairs = width // 2
    prefix = 0
    rem = 0
    boards: List[TakhtBoard] = []

    for i in range(1, pairs + 1):
        window = rem * 100 + digits[2 * i - 2] * 10 + digits[2 * i - 1]
        base = 20 * prefix
        s = _largest_digit(base, window)
        multiplier = base + s
        rem = window - s * multiplier
        new_prefix = prefix * 10 + s
        remaining = pairs - i

        fires = False
        tail = 0
        if remaining and (shortcut or trace_enabled):
            tail = n % 100 ** remaining
            fires = shortcut and rem == 0 and tail == 0
        final = remaining == 0 or fires

        if trace_enabled:
            residual = rem * 100 ** remaining + tail
            if final:
                boards.append(_board(i, width, residual, multiplier, 2 * i - 1, s, window, True))
            else:
                boards.append(_board(i, width, residual, 2 * new_prefix, 2 * i, s, window, False))

        prefix = new_prefix
        if fires:
            return prefix * 10 ** remaining, 0, boards, remaining

    return prefix, rem, boards, 0


def root_and_remainder(n: int) -> Tuple[int, int]:
    """Untraced extraction: (floor(sqrt(n)), n - floor(sqrt(n))^2)"""
    if n == 0:
        return 0, 0
    text = str(n)
    if len(text) % 2:
        text = "0" + text
    root, rem, _, _ = _extract(n, tuple(map(int, text)), False, False)
    return root, rem


def isqrt(n: int, trace_enabled: bool = False) -> IsqrtResult:
    """Integer square root by the dust-board method, optionally with board trace"""
    ensure_natural(n, "n")
    if n == 0:
        return IsqrtResult(n=0, root=0, remainder=0)

    digits = pad_to_even(to_digits(n)).digits
    root, rem, boards, _ = _extract(n, digits, trace_enabled, False)
    logger.debug("takht.extracted", digits=len(digits), root=root, remainder=rem)
    return IsqrtResult(n=n, root=root, remainder=rem, trace=tuple(boards))


def isqrt_zero_shortcut(n: int, trace_enabled: bool = True) -> IsqrtResult:
    """
    Same contract as isqrt, but stop as soon as the board is all zeros and the
    unprocessed part of N is 2m zeros; m zeros are then appended to the root
    """
    ensure_natural(n, "n")
    if n == 0:
        return IsqrtResult(n=0, root=0, remainder=0)

    digits = pad_to_even(to_digits(n)).digits
    root, rem, boards, zeros = _extract(n, digits, trace_enabled, True)
    if zeros:
        logger.debug("takht.shortcut_fired", prefix=root // 10 ** zeros, zeros=zeros)
    return IsqrtResult(
        n=n,
        root=root,
        remainder=rem,
        trace=tuple(boards),
        zero_shortcut_used=zeros > 0,
        shortcut_zeros=zeros,
    )


def halve_work_row(final_board: TakhtBoard, last_digit: int) -> int:
    """
    Undo the doublings on the last board: (W + last_digit) / 2, i.e. subtract
    the undoubled last digit, halve, and put it back
    """
    work = final_board.work_value
    if not 0 <= last_digit <= 9:
        raise CorruptTraceError(f"Last digit out of range: {last_digit}")
    # W ends in the undoubled last digit, so W + last_digit is always even
    if work % 10 != last_digit:
        raise CorruptTraceError(
            f"Work row {work} cannot end a run whose last digit is {last_digit}"
        )
    return (work + last_digit) // 2


def root_from_trace(result: IsqrtResult) -> Optional[int]:
    """Root recovered from the final board, with shortcut zeros re-appended"""
    if not result.trace:
        return None
    last = result.trace[-1]
    return halve_work_row(last, last.chosen_digit) * 10 ** result.shortcut_zeros


def replay_trace(n: int, trace: Tuple[TakhtBoard, ...]) -> int:
    """Re-apply every recorded subtraction to N and return the final residual"""
    ensure_natural(n, "n")
    if not trace:
        return n
    pairs = len(trace[0].remainder_row) // 2
    residual = n
    prefix = 0
    for board in trace:
        s = board.chosen_digit
        residual -= s * (20 * prefix + s) * 100 ** (pairs - board.step_index)
        prefix = prefix * 10 + s
        if residual < 0 or residual != board.residual:
            raise CorruptTraceError(
                f"Step {board.step_index} residual {board.residual} does not replay (got {residual})"
            )
    return residual
