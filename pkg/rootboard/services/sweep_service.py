"""
Sweep harnesses
Newton against the dust board for a range of integers, and the R <= E - 1
criterion against measured squared distances. Rows are plain dicts so they can
be written as CSV or JSON.
"""

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Dict, Iterator, List

import structlog

from rootboard.utils.approx import criterion_checks
from rootboard.utils.digits import format_rational, format_truncated_decimal
from rootboard.utils.newton import compare_methods, monotone_from_above, newton_run, quadratic_shrink_holds

logger = structlog.get_logger(__name__)

NEWTON_COLUMNS = [
    "a",
    "method",
    "steps_or_p",
    "value",
    "distance",
    "winner",
    "steps_to_within_one",
    "invariants_hold",
]
CRITERION_COLUMNS = ["n", "E", "R", "predicted_winner", "measured_winner", "agree"]


def newton_rows_for(a: int, places: int, newton_steps: int) -> List[Dict[str, Any]]:
    """Two rows for a: the dust-board value at p places and the Newton iterate"""
    comparison = compare_methods(a, places, newton_steps)
    run = newton_run(a, tolerance=Fraction(1), reference_places=places)
    steps_to_one = run.steps if run.converged else None
    invariants = monotone_from_above(run) and quadratic_shrink_holds(run)
    winner = comparison.winner.value
    return [
        {
            "a": a,
            "method": "takht",
            "steps_or_p": places,
            "value": str(comparison.takht),
            "distance": format_rational(comparison.takht_distance),
            "winner": winner,
            "steps_to_within_one": steps_to_one,
            "invariants_hold": invariants,
        },
        {
            "a": a,
            "method": "newton",
            "steps_or_p": newton_steps,
            "value": format_truncated_decimal(comparison.newton_iterate, places),
            "distance": format_rational(comparison.newton_distance),
            "winner": winner,
            "steps_to_within_one": steps_to_one,
            "invariants_hold": invariants,
        },
    ]


def _newton_rows_job(args) -> List[Dict[str, Any]]:
    return newton_rows_for(*args)


def newton_sweep(
    start: int, stop: int, places: int, newton_steps: int = 4, workers: int = 1
) -> List[Dict[str, Any]]:
    """Rows for every a in start..stop, in order whatever the worker count"""
    jobs = [(a, places, newton_steps) for a in range(start, stop + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_newton_rows_job, jobs, chunksize=32))
    else:
        chunks = [_newton_rows_job(job) for job in jobs]

    rows = [row for chunk in chunks for row in chunk]
    takht_wins = sum(1 for row in rows if row["method"] == "takht" and row["winner"] == "takht")
    logger.info(
        "sweep.newton_finished",
        start=start,
        stop=stop,
        places=places,
        newton_steps=newton_steps,
        takht_wins=takht_wins,
        invariant_failures=sum(1 for row in rows if not row["invariants_hold"]) // 2,
    )
    return rows


def criterion_rows(start: int, stop: int) -> Iterator[Dict[str, Any]]:
    """One row per non-square n in start..stop"""
    violations = 0
    for check in criterion_checks(start, stop):
        if not check.agree:
            violations += 1
        yield {
            "n": check.n,
            "E": check.integer_part,
            "R": check.remainder,
            "predicted_winner": check.predicted_winner.value,
            "measured_winner": check.measured_winner.value,
            "agree": check.agree,
        }
    logger.info("sweep.criterion_finished", start=start, stop=stop, violations=violations)
