"""
Rootboard command line
Every operation with text, JSON or CSV output

Examples:
  python -m rootboard isqrt 54756
  python -m rootboard trace 41209 --paper-layout
  python -m rootboard sexagesimal 5 --places 3
  python -m rootboard verify 249 --root 15 --remainder 24 --format json
  python -m rootboard sweep --kind criterion --stop 10000 > criterion.csv
"""

import argparse
import csv
import io
import json
import sys
from enum import Enum, IntEnum
from typing import Any, Callable, Dict, List, Optional, Sequence

import structlog
from pydantic import BaseModel, ConfigDict, Field

from rootboard.core.config import settings
from rootboard.core.exceptions import RootboardError, UsageError
from rootboard.core.monitoring import setup_logging
from rootboard.services import report_service as reports
from rootboard.services import sweep_service
from rootboard.utils.approx import Rule, approximate, best_approximation, compare_rules
from rootboard.utils.scale import ScalingSpec, decimal_expansion, scaled_isqrt, to_sexagesimal
from rootboard.utils.takht import isqrt, isqrt_zero_shortcut
from rootboard.utils.validators import parse_fraction, parse_natural
from rootboard.utils.verify import check_root, is_possible_square
from rootboard.utils.newton import compare_methods, newton_run

logger = structlog.get_logger(__name__)


class Subcommand(str, Enum):
    ISQRT = "isqrt"
    TRACE = "trace"
    APPROX = "approx"
    COMPARE = "compare"
    SCALE = "scale"
    SEXAGESIMAL = "sexagesimal"
    VERIFY = "verify"
    NEWTON = "newton"
    SWEEP = "sweep"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    PRECONDITION = 2
    REFUTED = 3


class CommandConfig(BaseModel):
    """One parsed invocation; input stays a string until dispatch parses it"""

    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    input: Optional[str] = None
    options: Dict[str, Any] = Field(default_factory=dict)
    output_format: OutputFormat = OutputFormat.TEXT


class CommandResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    exit_code: int
    output: str = ""
    error: Optional[str] = None


class Rendered(BaseModel):
    """What a handler produces before the output format is chosen"""

    payload: Any
    text: str
    rows: Optional[List[Dict[str, Any]]] = None
    columns: Optional[List[str]] = None
    exit_code: int = ExitCode.OK


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; usage errors here are status 1"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _csv_text(rows: List[Dict[str, Any]], columns: List[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: "" if row.get(key) is None else row.get(key) for key in columns})
    return buffer.getvalue().rstrip("\n")


# Handlers

def _option(config: CommandConfig, name: str, default: Any) -> Any:
    value = config.options.get(name)
    return default if value is None else value


def _natural_input(config: CommandConfig) -> int:
    if config.input is None:
        raise UsageError(f"{config.subcommand.value} needs a number")
    return parse_natural(config.input)


def _handle_isqrt(config: CommandConfig) -> Rendered:
    n = _natural_input(config)
    if config.options.get("shortcut"):
        result = isqrt_zero_shortcut(n, trace_enabled=False)
    else:
        result = isqrt(n)
    return Rendered(payload=reports.isqrt_payload(result), text=reports.render_isqrt_text(result))


def _handle_trace(config: CommandConfig) -> Rendered:
    n = _natural_input(config)
    if config.options.get("shortcut"):
        result = isqrt_zero_shortcut(n, trace_enabled=True)
    else:
        result = isqrt(n, trace_enabled=True)
    return Rendered(
        payload=reports.isqrt_payload(result, include_trace=True),
        text=reports.render_trace_text(result, paper_layout=bool(config.options.get("paper_layout"))),
        rows=reports.trace_rows(result),
        columns=["step", "residual", "work_row", "offset", "chosen_digit", "window", "final"],
    )


def _handle_approx(config: CommandConfig) -> Rendered:
    n = _natural_input(config)
    rule_name = config.options.get("rule") or "auto"
    if rule_name == "auto":
        approximation = best_approximation(n)
        selected_by = "criterion"
    else:
        approximation = approximate(n, Rule(rule_name))
        selected_by = None
    remainder = n - approximation.integer_part ** 2
    payload = reports.approximation_payload(approximation, n, remainder)
    payload["selected_by"] = selected_by or "user"
    return Rendered(
        payload=payload,
        text=reports.render_approximation_text(approximation, n, selected_by),
    )


def _handle_compare(config: CommandConfig) -> Rendered:
    comparison = compare_rules(_natural_input(config))
    return Rendered(
        payload=reports.comparison_payload(comparison),
        text=reports.render_comparison_text(comparison),
    )


def _handle_scale(config: CommandConfig) -> Rendered:
    n = _natural_input(config)
    spec = ScalingSpec.of(_option(config, "base", 10), _option(config, "pairs", settings.DECIMAL_PLACES))
    scaled = scaled_isqrt(n, spec)
    return Rendered(payload=reports.scaled_payload(scaled), text=reports.render_scaled_text(scaled))


def _handle_sexagesimal(config: CommandConfig) -> Rendered:
    n = _natural_input(config)
    root = decimal_expansion(n, _option(config, "precision", settings.DECIMAL_PLACES))
    expansion = to_sexagesimal(root, _option(config, "places", settings.SEXAGESIMAL_PLACES))
    return Rendered(
        payload=reports.sexagesimal_payload(expansion, root),
        text=reports.render_sexagesimal_text(
            expansion, root, show_chain=bool(config.options.get("show_chain"))
        ),
    )


def _handle_verify(config: CommandConfig) -> Rendered:
    n = _natural_input(config)
    root = config.options.get("root")
    if root is None:
        screening = is_possible_square(n)
        return Rendered(
            payload=reports.screening_payload(screening),
            text=reports.render_screening_text(screening),
        )
    report = check_root(n, parse_natural(root), parse_natural(config.options.get("remainder") or "0"))
    return Rendered(
        payload=reports.verification_payload(report),
        text=reports.render_verification_text(report),
        exit_code=ExitCode.OK if report.passed else ExitCode.REFUTED,
    )


def _handle_newton(config: CommandConfig) -> Rendered:
    a = _natural_input(config)
    u0 = config.options.get("u0")
    u0_value = parse_fraction(u0) if u0 else None
    compare_places = config.options.get("compare")
    if compare_places is not None:
        comparison = compare_methods(a, compare_places, _option(config, "steps", 4), u0_value)
        return Rendered(
            payload=reports.method_comparison_payload(comparison),
            text=reports.render_method_comparison_text(comparison),
        )

    tolerance = config.options.get("tolerance")
    run = newton_run(
        a,
        u0=u0_value,
        max_steps=config.options.get("max_steps"),
        tolerance=parse_fraction(tolerance) if tolerance else None,
    )
    return Rendered(
        payload=reports.newton_payload(run),
        text=reports.render_newton_text(run),
        rows=reports.newton_rows(run),
        columns=["step", "value", "decimal", "error", "correct_digits"],
    )


def _check_bounds(start: int, stop: int) -> None:
    if start < 1:
        raise UsageError(f"--start must be at least 1, got {start}")
    if start > stop:
        raise UsageError(f"--start {start} exceeds --stop {stop}")


def _handle_sweep(config: CommandConfig) -> Rendered:
    kind = _option(config, "kind", "newton")
    if kind == "criterion":
        start = _option(config, "start", settings.SWEEP_CRITERION_START)
        stop = _option(config, "stop", settings.SWEEP_CRITERION_STOP)
        _check_bounds(start, stop)
        rows = list(sweep_service.criterion_rows(start, stop))
        columns = sweep_service.CRITERION_COLUMNS
        failures = sum(1 for row in rows if not row["agree"])
    else:
        start = _option(config, "start", settings.SWEEP_NEWTON_START)
        stop = _option(config, "stop", settings.SWEEP_NEWTON_STOP)
        _check_bounds(start, stop)
        rows = sweep_service.newton_sweep(
            start,
            stop,
            _option(config, "places", settings.SWEEP_COMPARE_PLACES),
            _option(config, "steps", 4),
            _option(config, "workers", settings.SWEEP_WORKERS),
        )
        columns = sweep_service.NEWTON_COLUMNS
        failures = sum(1 for row in rows if not row["invariants_hold"])
    if failures:
        logger.warning("sweep.failures", kind=kind, failures=failures)
    return Rendered(payload=rows, text=_csv_text(rows, columns), rows=rows, columns=columns)


HANDLERS: Dict[Subcommand, Callable[[CommandConfig], Rendered]] = {
    Subcommand.ISQRT: _handle_isqrt,
    Subcommand.TRACE: _handle_trace,
    Subcommand.APPROX: _handle_approx,
    Subcommand.COMPARE: _handle_compare,
    Subcommand.SCALE: _handle_scale,
    Subcommand.SEXAGESIMAL: _handle_sexagesimal,
    Subcommand.VERIFY: _handle_verify,
    Subcommand.NEWTON: _handle_newton,
    Subcommand.SWEEP: _handle_sweep,
}


def run(config: CommandConfig) -> CommandResult:
    """Dispatch one command and render it in the requested format"""
    try:
        rendered = HANDLERS[config.subcommand](config)
        if config.output_format is OutputFormat.JSON:
            output = json.dumps(rendered.payload, indent=2, ensure_ascii=False)
        elif config.output_format is OutputFormat.CSV:
            if rendered.rows is None or rendered.columns is None:
                raise UsageError(f"CSV output is not available for {config.subcommand.value}")
            output = _csv_text(rendered.rows, rendered.columns)
        else:
            output = rendered.text
        return CommandResult(exit_code=rendered.exit_code, output=output)
    except RootboardError as e:
        logger.warning("cli.failed", subcommand=config.subcommand.value, error_code=e.error_code, error=e.message)
        return CommandResult(exit_code=e.exit_code, error=f"error: {e.message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rootboard", description="Digit-by-digit square roots with exact arithmetic")
    parser.add_argument("--log-level", default=None, help="Log level (logs go to stderr)")
    parser.add_argument("--log-format", choices=["console", "json"], default=None)

    common = _Parser(add_help=False)
    common.add_argument(
        "--format", dest="output_format", choices=[f.value for f in OutputFormat], default="text"
    )

    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("isqrt", parents=[common], help="Integer root and remainder")
    p.add_argument("input")
    p.add_argument("--shortcut", action="store_true", help="Stop early on trailing zero pairs")

    p = sub.add_parser("trace", parents=[common], help="Board states step by step")
    p.add_argument("input")
    p.add_argument("--shortcut", action="store_true")
    p.add_argument("--paper-layout", action="store_true", help="One continuous table")

    p = sub.add_parser("approx", parents=[common], help="Fractional approximation E + r")
    p.add_argument("input")
    p.add_argument("--rule", choices=["auto"] + [r.value for r in Rule], default="auto")

    p = sub.add_parser("compare", parents=[common], help="Both rules against the criterion")
    p.add_argument("input")

    p = sub.add_parser("scale", parents=[common], help="Root of A^(2p) * N divided by A^p")
    p.add_argument("input")
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--pairs", type=int, default=None)

    p = sub.add_parser("sexagesimal", parents=[common], help="Decimal root re-expressed in base 60")
    p.add_argument("input")
    p.add_argument("--places", type=int, default=None, help="Number of base-60 places")
    p.add_argument("--precision", type=int, default=None, help="Decimal places p of the root")
    p.add_argument("--show-chain", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="Casting out nines on a claimed root")
    p.add_argument("input")
    p.add_argument("--root", default=None)
    p.add_argument("--remainder", default=None)

    p = sub.add_parser("newton", parents=[common], help="Exact Newton iteration")
    p.add_argument("input")
    p.add_argument("--u0", default=None, help="Start value, e.g. 1 or 3/2 (default a)")
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--tolerance", default=None, help="Exact tolerance, e.g. 1/1000000")
    p.add_argument("--compare", type=int, default=None, metavar="P", help="Compare with the board root to P places")
    p.add_argument("--steps", type=int, default=None, help="Newton steps for --compare")

    p = sub.add_parser("sweep", parents=[common], help="Newton or criterion sweep as CSV")
    p.add_argument("--kind", choices=["newton", "criterion"], default="newton")
    p.add_argument("--start", type=int, default=None)
    p.add_argument("--stop", type=int, default=None)
    p.add_argument("--places", type=int, default=None)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)

    return parser


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    values = vars(args).copy()
    subcommand = Subcommand(values.pop("subcommand"))
    output_format = OutputFormat(values.pop("output_format"))
    values.pop("log_level", None)
    values.pop("log_format", None)
    raw_input = values.pop("input", None)
    return CommandConfig(
        subcommand=subcommand,
        input=raw_input,
        options=values,
        output_format=output_format,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return ExitCode.USAGE

    setup_logging(args.log_level, args.log_format)
    result = run(config_from_args(args))
    if result.output:
        print(result.output)
    if result.error:
        print(result.error, file=sys.stderr)
    return result.exit_code
