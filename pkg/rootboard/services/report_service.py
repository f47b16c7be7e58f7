"""
Report rendering shared by the CLI and the HTTP surface
Payloads are JSON-ready dicts (naturals as decimal strings, fractions as
"num/den"); text renderings carry the same numbers
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional

from rootboard.utils.approx import Approximation, RuleComparison
from rootboard.utils.digits import format_mixed, format_rational, format_truncated_decimal
from rootboard.utils.newton import MethodComparison, NewtonRun
from rootboard.utils.scale import FixedPoint, ScaledRoot, SexagesimalExpansion
from rootboard.utils.takht import IsqrtResult, TakhtBoard, root_from_trace
from rootboard.utils.verify import SquareScreening, VerificationReport

# Decimal places used when printing Newton iterates
ITERATE_DISPLAY_PLACES = 12


# Dust-board extraction

def board_payload(board: TakhtBoard) -> Dict[str, Any]:
    return {
        "step": board.step_index,
        "residual": str(board.residual),
        "work_row": str(board.work_row),
        "offset": board.offset,
        "chosen_digit": board.chosen_digit,
    }


def isqrt_payload(result: IsqrtResult, include_trace: bool = False) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "n": str(result.n),
        "root": str(result.root),
        "remainder": str(result.remainder),
        "perfect_square": result.is_perfect_square,
        "zero_shortcut_used": result.zero_shortcut_used,
        "shortcut_zeros": result.shortcut_zeros,
    }
    if include_trace:
        payload["trace"] = [board_payload(board) for board in result.trace]
        halved = root_from_trace(result)
        payload["halved_root"] = None if halved is None else str(halved)
    return payload


def render_isqrt_text(result: IsqrtResult) -> str:
    text = f"root={result.root} remainder={result.remainder}"
    if result.zero_shortcut_used:
        text += f" shortcut_zeros={result.shortcut_zeros}"
    return text


def _row(cells: List[str], skip_first: bool) -> str:
    if skip_first:
        cells = cells[1:]
    return " ".join(cells).rstrip()


def _work_cells(board: TakhtBoard, width: int) -> List[str]:
    cells = [" "] * width
    for i, digit in enumerate(board.work_row.digits):
        cells[board.offset + i] = str(digit)
    return cells


def render_trace_text(result: IsqrtResult, paper_layout: bool = False) -> str:
    """
    One aligned board per step, or with paper_layout the continuous table:
    N, then for each step the chosen digit, the remainder row and the work row
    """
    if not result.trace:
        return render_isqrt_text(result)

    width = len(result.trace[0].remainder_row)
    # The padding column only ever holds the leading zero of an odd-length N
    skip_first = len(str(result.n)) % 2 == 1
    lines: List[str] = []

    if paper_layout:
        lines.append(_row(list(f"{result.n:0{width}d}"), skip_first))
        for board in result.trace:
            digit_cells = [" "] * width
            digit_cells[2 * board.step_index - 1] = str(board.chosen_digit)
            lines.append(_row(digit_cells, skip_first))
            lines.append(_row([str(d) for d in board.remainder_row.digits], skip_first))
            lines.append(_row(_work_cells(board, width), skip_first))
    else:
        for board in result.trace:
            if lines:
                lines.append("")
            lines.append(f"step {board.step_index}: digit {board.chosen_digit}")
            lines.append(_row([str(d) for d in board.remainder_row.digits], skip_first))
            lines.append(_row(_work_cells(board, width), skip_first))

    if result.zero_shortcut_used:
        lines.append("")
        lines.append(f"shortcut: {result.shortcut_zeros} zero(s) appended")
    return "\n".join(lines)


def trace_rows(result: IsqrtResult) -> List[Dict[str, Any]]:
    rows = []
    for board in result.trace:
        row = board_payload(board)
        row["window"] = str(board.window)
        row["final"] = board.final
        rows.append(row)
    return rows


# Fractional approximations

def approximation_payload(approx: Approximation, n: int, remainder: int) -> Dict[str, Any]:
    return {
        "n": str(n),
        "E": str(approx.integer_part),
        "R": str(remainder),
        "rule": approx.rule.value,
        "fraction": format_rational(approx.fraction),
        "value": format_rational(approx.value),
        "mixed": format_mixed(approx.value),
        "square": format_rational(approx.square),
        "distance": format_rational(abs(approx.square - n)),
    }


def render_approximation_text(approx: Approximation, n: int, selected_by: Optional[str] = None) -> str:
    text = f"sqrt({n}) ~ {approx.integer_part} + {format_rational(approx.fraction)} [{approx.rule.value}]"
    if selected_by:
        text += f" selected by {selected_by}"
    text += f"; square {format_mixed(approx.square)}"
    return text


def comparison_payload(comparison: RuleComparison) -> Dict[str, Any]:
    n = comparison.n
    return {
        "n": str(n),
        "E": str(comparison.integer_part),
        "R": str(comparison.remainder),
        "khwarizmi": approximation_payload(comparison.khwarizmi, n, comparison.remainder),
        "conventional": approximation_payload(comparison.conventional, n, comparison.remainder),
        "predicted_winner": comparison.predicted_winner.value,
        "measured_winner": comparison.measured_winner.value,
        "agree": comparison.agree,
        "historical_claim_holds": comparison.historical_claim_holds,
    }


def render_comparison_text(comparison: RuleComparison) -> str:
    lines = [f"n={comparison.n} E={comparison.integer_part} R={comparison.remainder}"]
    for approx, distance in (
        (comparison.khwarizmi, comparison.khwarizmi_distance),
        (comparison.conventional, comparison.conventional_distance),
    ):
        lines.append(
            f"{approx.rule.value:<12} {format_mixed(approx.value):<16} "
            f"square {format_mixed(approx.square):<16} distance {format_rational(distance)}"
        )
    lines.append(
        f"measured={comparison.measured_winner.value} predicted={comparison.predicted_winner.value} "
        f"agree={str(comparison.agree).lower()}"
    )
    lines.append(
        "conventional-always-better claim: "
        + ("holds" if comparison.historical_claim_holds else "fails")
    )
    return "\n".join(lines)


# Scaling and sexagesimal output

def scaled_payload(scaled: ScaledRoot) -> Dict[str, Any]:
    payload = {
        "n": str(scaled.n),
        "base": str(scaled.spec.base),
        "pairs": scaled.spec.exponent_pairs,
        "scaled_n": str(scaled.scaled_n),
        "scaled_root": str(scaled.scaled_root),
        "scaled_remainder": str(scaled.scaled_remainder),
        "value": format_rational(scaled.value),
        "exact": scaled.is_exact,
    }
    if scaled.spec.base == 10:
        payload["fixed_point"] = format_truncated_decimal(scaled.value, scaled.spec.exponent_pairs)
    return payload


def render_scaled_text(scaled: ScaledRoot) -> str:
    spec = scaled.spec
    text = (
        f"isqrt({scaled.scaled_n}) = {scaled.scaled_root} remainder {scaled.scaled_remainder}; "
        f"{scaled.scaled_root}/{spec.divisor} = {format_mixed(scaled.value)}"
    )
    if spec.base == 10:
        text += f" = {format_truncated_decimal(scaled.value, spec.exponent_pairs)}"
    return text


def sexagesimal_payload(expansion: SexagesimalExpansion, root: FixedPoint) -> Dict[str, Any]:
    return {
        "integer": str(expansion.integer_part),
        "places": list(expansion.places),
        "p": root.places,
        "remainder": str(root.remainder),
        "fixed_point": str(root),
        "truncated": expansion.truncated,
        "chain": [
            {"product": str(step.product), "place": step.place, "residue": str(step.residue)}
            for step in expansion.chain
        ],
        "text": str(expansion),
    }


def render_sexagesimal_text(expansion: SexagesimalExpansion, root: FixedPoint, show_chain: bool = False) -> str:
    if not show_chain:
        return str(expansion)
    unit = 10 ** root.places
    lines = [f"{root.scaled_root} = {expansion.integer_part} x {unit} + {root.scaled_root % unit}"]
    residue = root.scaled_root % unit
    for step in expansion.chain:
        lines.append(f"{residue} x 60 = {step.product} = {step.place} x {unit} + {step.residue}")
        residue = step.residue
    lines.append(str(expansion))
    return "\n".join(lines)


# Verification

def verification_payload(report: VerificationReport) -> Dict[str, Any]:
    return {
        "n": str(report.n),
        "root": str(report.root),
        "remainder": str(report.remainder),
        "a": report.residue_n,
        "b": report.residue_root_sq,
        "c": report.residue_remainder,
        "passed": report.passed,
        "semantics": "necessary-only",
        "outcome": report.outcome.value,
        "verdict": report.verdict,
        "unit_digit_consistent": report.unit_digit_consistent,
    }


def render_verification_text(report: VerificationReport) -> str:
    text = (
        f"a={report.residue_n} b={report.residue_root_sq} c={report.residue_remainder} "
        f"{report.verdict} ({report.outcome.value})"
    )
    if report.unit_digit_consistent is False:
        text += "; root unit digit impossible for this square"
    return text


def screening_payload(screening: SquareScreening) -> Dict[str, Any]:
    return {
        "n": str(screening.n),
        "unit_digit": screening.unit_digit,
        "residue": screening.residue,
        "possible": screening.possible,
        "reasons": list(screening.reasons),
        "root_unit_candidates": list(screening.root_unit_candidates),
        "semantics": "necessary-only",
    }


def render_screening_text(screening: SquareScreening) -> str:
    if screening.possible:
        candidates = ",".join(str(d) for d in screening.root_unit_candidates)
        return (
            f"n={screening.n} not excluded as a square (unit {screening.unit_digit}, "
            f"mod 9 = {screening.residue}); root unit digit in {{{candidates}}}"
        )
    return f"n={screening.n} excluded as a square: " + "; ".join(screening.reasons)


# Newton

def _iterate_row(step: int, value: Fraction, target: int, correct: Optional[int]) -> Dict[str, Any]:
    return {
        "step": step,
        "value": format_rational(value),
        "decimal": format_truncated_decimal(value, ITERATE_DISPLAY_PLACES),
        "error": format_rational(abs(value * value - target)),
        "correct_digits": correct,
    }


def newton_payload(run: NewtonRun) -> Dict[str, Any]:
    return {
        "a": str(run.target),
        "u0": format_rational(run.initial),
        "tolerance": format_rational(run.tolerance),
        "max_steps": run.max_steps,
        "steps": run.steps,
        "converged": run.converged,
        "reference": str(run.reference),
        "iterates": newton_rows(run),
    }


def newton_rows(run: NewtonRun) -> List[Dict[str, Any]]:
    return [
        _iterate_row(step, value, run.target, correct)
        for step, (value, correct) in enumerate(zip(run.iterates, run.correct_digits))
    ]


def render_newton_text(run: NewtonRun) -> str:
    lines = [f"a={run.target} u0={format_rational(run.initial)} tolerance={format_rational(run.tolerance)}"]
    for row in newton_rows(run):
        lines.append(
            f"u{row['step']} = {row['decimal']}  |u^2-a| = {row['error']}  "
            f"correct digits {row['correct_digits']}"
        )
    status = "converged" if run.converged else "not converged"
    lines.append(f"{status} after {run.steps} step(s); reference {run.reference}")
    return "\n".join(lines)


def method_comparison_payload(comparison: MethodComparison) -> Dict[str, Any]:
    return {
        "a": str(comparison.a),
        "p": comparison.places,
        "newton_steps": comparison.newton_steps,
        "takht_value": str(comparison.takht),
        "takht_distance": format_rational(comparison.takht_distance),
        "newton_value": format_rational(comparison.newton_iterate),
        "newton_decimal": format_truncated_decimal(comparison.newton_iterate, comparison.places),
        "newton_distance": format_rational(comparison.newton_distance),
        "winner": comparison.winner.value,
        "metric": comparison.metric,
    }


def render_method_comparison_text(comparison: MethodComparison) -> str:
    return "\n".join(
        [
            f"takht  p={comparison.places}: {comparison.takht}  |v^2-a| = {format_rational(comparison.takht_distance)}",
            f"newton n={comparison.newton_steps}: "
            f"{format_truncated_decimal(comparison.newton_iterate, comparison.places)}  "
            f"|v^2-a| = {format_rational(comparison.newton_distance)}",
            f"winner={comparison.winner.value} (metric {comparison.metric})",
        ]
    )
