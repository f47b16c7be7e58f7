"""
Rootboard - FastAPI application
Exact digit-by-digit square roots over HTTP
"""

import time
from contextlib import asynccontextmanager
from typing import Any, Dict

import structlog
import uvicorn
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from rootboard import __version__
from rootboard.core.config import settings
from rootboard.core.exceptions import CorruptTraceError, ParseError, PreconditionError, RootboardError, UsageError
from rootboard.core.monitoring import log_request_middleware, setup_logging
from rootboard.routers import roots

setup_logging()
logger = structlog.get_logger(__name__)

HTTP_STATUS = {
    ParseError: 400,
    UsageError: 400,
    PreconditionError: 422,
    CorruptTraceError: 422,
}


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info("app.startup", app=settings.APP_NAME, version=__version__, environment=settings.ENVIRONMENT)
    yield
    logger.info("app.shutdown", app=settings.APP_NAME)


app = FastAPI(
    title=settings.APP_NAME,
    description=settings.APP_DESCRIPTION,
    version=settings.APP_VERSION,
    docs_url="/docs" if settings.DEBUG else None,
    redoc_url="/redoc" if settings.DEBUG else None,
    openapi_url="/openapi.json" if settings.DEBUG else None,
    lifespan=lifespan,
    responses={
        400: {
            "description": "Malformed input",
            "content": {
                "application/json": {
                    "example": {"detail": "Not a canonical decimal natural: '007'", "error_code": "PARSE_ERROR"}
                }
            },
        },
        422: {
            "description": "Precondition violated",
            "content": {
                "application/json": {
                    "example": {"detail": "khwarizmi rule needs E >= 1", "error_code": "PRECONDITION_ERROR"}
                }
            },
        },
    },
)

app.middleware("http")(log_request_middleware)


@app.exception_handler(RootboardError)
async def rootboard_error_handler(request: Request, exc: RootboardError):
    status_code = HTTP_STATUS.get(type(exc), 400)
    logger.warning(
        "request.rejected",
        path=str(request.url.path),
        error_code=exc.error_code,
        error=exc.message,
    )
    return JSONResponse(
        status_code=status_code,
        content={
            "detail": exc.message,
            "error_code": exc.error_code,
            "timestamp": time.time(),
        },
    )


@app.exception_handler(404)
async def not_found_handler(request: Request, exc):
    return JSONResponse(
        status_code=404,
        content={
            "detail": "The requested resource was not found",
            "error_code": "NOT_FOUND",
            "timestamp": time.time(),
            "path": str(request.url.path),
        },
    )


@app.get("/", tags=["Root"])
async def root() -> Dict[str, Any]:
    return {
        "service": settings.APP_NAME,
        "description": settings.APP_DESCRIPTION,
        "version": settings.APP_VERSION,
        "status": "operational",
        "operations": [
            "isqrt",
            "trace",
            "approx",
            "compare",
            "scale",
            "sexagesimal",
            "verify",
            "newton",
        ],
        "docs": "/docs" if settings.DEBUG else None,
    }


@app.get("/health", tags=["Health"])
async def health_check():
    return {
        "status": "healthy",
        "service": settings.APP_NAME,
        "version": settings.APP_VERSION,
        "timestamp": time.time(),
    }


app.include_router(roots.router, prefix="/api/v1")


if __name__ == "__main__":
    uvicorn.run(
        "rootboard.main:app",
        host="0.0.0.0",
        port=8000,
        reload=settings.DEBUG,
        log_level=settings.LOG_LEVEL.lower(),
        server_header=False,
    )
