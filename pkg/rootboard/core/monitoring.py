"""
Rootboard - Logging setup
structlog configuration shared by the CLI and the HTTP surface
"""

import logging
import sys
import time
from typing import Optional

import structlog
from fastapi import Request

from rootboard.core.config import settings


def setup_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> None:
    """Configure structlog; all log output goes to stderr"""
    level_name = (level or settings.LOG_LEVEL).upper()
    renderer_name = fmt or settings.LOG_FORMAT

    if renderer_name == "json":
        renderer = structlog.processors.JSONRenderer()
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=False)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            logging.getLevelName(level_name)
        ),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


# Request logging middleware
async def log_request_middleware(request: Request, call_next):
    logger = structlog.get_logger("rootboard.request")
    started = time.perf_counter()
    response = await call_next(request)
    logger.info(
        "request.completed",
        method=request.method,
        path=request.url.path,
        status=response.status_code,
        duration_ms=round((time.perf_counter() - started) * 1000, 3),
    )
    return response
