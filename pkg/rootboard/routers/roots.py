"""
Square root endpoints
The same payloads the CLI prints with --format json, wrapped in the standard envelope
"""

from datetime import datetime, timezone
from typing import Any, Dict

from fastapi import APIRouter, Depends

from rootboard.core.config import settings
from rootboard.services import report_service as reports
from rootboard.utils.approx import Rule, approximate, best_approximation, compare_rules
from rootboard.utils.newton import compare_methods, newton_run
from rootboard.utils.scale import ScalingSpec, decimal_expansion, scaled_isqrt, to_sexagesimal
from rootboard.utils.takht import isqrt, isqrt_zero_shortcut
from rootboard.utils.validators import parse_fraction, parse_natural
from rootboard.utils.verify import check_root, is_possible_square
from rootboard.schemas.roots import (
    ApproxQuery,
    MethodCompareQuery,
    NewtonQuery,
    RuleChoice,
    ScaleQuery,
    SexagesimalQuery,
    TraceQuery,
    VerifyQuery,
)

router = APIRouter(tags=["Roots"])


class RootResponse:
    """Standard response envelope"""

    @staticmethod
    def success(data: Any = None, message: str = "Success") -> Dict[str, Any]:
        return {
            "success": True,
            "message": message,
            "data": data,
            "timestamp": datetime.now(timezone.utc).isoformat(),
        }


@router.get("/isqrt/{n}", response_model=Dict[str, Any])
async def get_isqrt(n: str, shortcut: bool = False):
    value = parse_natural(n)
    result = isqrt_zero_shortcut(value, trace_enabled=False) if shortcut else isqrt(value)
    return RootResponse.success(data=reports.isqrt_payload(result), message="Root extracted")


@router.get("/trace/{n}", response_model=Dict[str, Any])
async def get_trace(n: str, query: TraceQuery = Depends()):
    value = parse_natural(n)
    if query.shortcut:
        result = isqrt_zero_shortcut(value, trace_enabled=True)
    else:
        result = isqrt(value, trace_enabled=True)
    data = reports.isqrt_payload(result, include_trace=True)
    if query.paper_layout:
        data["table"] = reports.render_trace_text(result, paper_layout=True)
    return RootResponse.success(data=data, message="Board trace recorded")


@router.get("/approx/{n}", response_model=Dict[str, Any])
async def get_approximation(n: str, query: ApproxQuery = Depends()):
    value = parse_natural(n)
    if query.rule is RuleChoice.AUTO:
        approximation = best_approximation(value)
        selected_by = "criterion"
    else:
        approximation = approximate(value, Rule(query.rule.value))
        selected_by = "user"
    data = reports.approximation_payload(approximation, value, value - approximation.integer_part ** 2)
    data["selected_by"] = selected_by
    return RootResponse.success(data=data, message="Approximation computed")


@router.get("/compare/{n}", response_model=Dict[str, Any])
async def get_rule_comparison(n: str):
    comparison = compare_rules(parse_natural(n))
    return RootResponse.success(data=reports.comparison_payload(comparison), message="Rules compared")


@router.get("/scale/{n}", response_model=Dict[str, Any])
async def get_scaled_root(n: str, query: ScaleQuery = Depends()):
    spec = ScalingSpec.of(query.base, query.pairs or settings.DECIMAL_PLACES)
    scaled = scaled_isqrt(parse_natural(n), spec)
    return RootResponse.success(data=reports.scaled_payload(scaled), message="Scaled root computed")


@router.get("/sexagesimal/{n}", response_model=Dict[str, Any])
async def get_sexagesimal(n: str, query: SexagesimalQuery = Depends()):
    root = decimal_expansion(parse_natural(n), query.precision or settings.DECIMAL_PLACES)
    expansion = to_sexagesimal(root, query.places or settings.SEXAGESIMAL_PLACES)
    return RootResponse.success(
        data=reports.sexagesimal_payload(expansion, root),
        message="Sexagesimal expansion computed",
    )


@router.get("/verify/{n}", response_model=Dict[str, Any])
async def get_verification(n: str, query: VerifyQuery = Depends()):
    value = parse_natural(n)
    if query.root is None:
        screening = is_possible_square(value)
        return RootResponse.success(data=reports.screening_payload(screening), message="Square screening done")

    report = check_root(value, parse_natural(query.root), parse_natural(query.remainder or "0"))
    return RootResponse.success(
        data=reports.verification_payload(report),
        message=f"Verification {report.outcome.value}",
    )


@router.get("/newton/{a}", response_model=Dict[str, Any])
async def get_newton_run(a: str, query: NewtonQuery = Depends()):
    run = newton_run(
        parse_natural(a),
        u0=parse_fraction(query.u0) if query.u0 else None,
        max_steps=query.max_steps,
        tolerance=parse_fraction(query.tolerance) if query.tolerance else None,
    )
    return RootResponse.success(data=reports.newton_payload(run), message="Newton iteration finished")


@router.get("/newton/{a}/compare", response_model=Dict[str, Any])
async def get_method_comparison(a: str, query: MethodCompareQuery = Depends()):
    comparison = compare_methods(
        parse_natural(a),
        query.places,
        query.steps,
        parse_fraction(query.u0) if query.u0 else None,
    )
    return RootResponse.success(
        data=reports.method_comparison_payload(comparison),
        message="Methods compared",
    )
