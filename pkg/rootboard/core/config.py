"""
Rootboard - Configuration
Settings for the CLI, the HTTP surface and the sweep harnesses
"""

import logging
from fractions import Fraction
from functools import lru_cache

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from rootboard.utils.validators import parse_fraction


def _level_names_mapping() -> dict:
    # logging.getLevelNamesMapping() is Python 3.11+; same mapping on 3.10
    if hasattr(logging, "getLevelNamesMapping"):
        return logging.getLevelNamesMapping()
    return dict(logging._nameToLevel)


class Settings(BaseSettings):
    """
    Rootboard settings
    Every value can be overridden with a ROOTBOARD_ prefixed environment variable
    """

    # Application Information
    APP_NAME: str = "Rootboard"
    APP_VERSION: str = "1.0.0"
    APP_DESCRIPTION: str = "Digit-by-digit square root extraction with exact arithmetic"

    # Environment
    ENVIRONMENT: str = Field(default="development")
    DEBUG: bool = Field(default=False)

    # Logging
    LOG_LEVEL: str = Field(default="WARNING")
    LOG_FORMAT: str = Field(default="console")  # console or json

    # Newton harness
    NEWTON_MAX_STEPS: int = Field(default=16)
    NEWTON_REFERENCE_PLACES: int = Field(default=40, ge=1)
    NEWTON_TOLERANCE: str = Field(default="1/1000000")  # exact fraction "n/d"

    # Decimal and sexagesimal output
    DECIMAL_PLACES: int = Field(default=3, ge=1)
    SEXAGESIMAL_PLACES: int = Field(default=3, ge=1)

    # Sweeps (inclusive bounds)
    SWEEP_NEWTON_START: int = Field(default=2, ge=1)
    SWEEP_NEWTON_STOP: int = Field(default=1023, ge=1)
    SWEEP_CRITERION_START: int = Field(default=2, ge=1)
    SWEEP_CRITERION_STOP: int = Field(default=1_000_000, ge=1)
    SWEEP_COMPARE_PLACES: int = Field(default=6, ge=1)
    SWEEP_WORKERS: int = Field(default=1, ge=1)

    model_config = SettingsConfigDict(
        env_prefix="ROOTBOARD_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )

    # Validators
    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in _level_names_mapping():
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("LOG_FORMAT")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        if v not in ("console", "json"):
            raise ValueError("LOG_FORMAT must be 'console' or 'json'")
        return v

    @field_validator("NEWTON_TOLERANCE")
    @classmethod
    def validate_newton_tolerance(cls, v: str) -> str:
        parse_fraction(v)
        return v

    @field_validator("NEWTON_MAX_STEPS")
    @classmethod
    def validate_newton_max_steps(cls, v: int) -> int:
        if v < 1:
            raise ValueError("NEWTON_MAX_STEPS must be at least 1")
        return v

    @model_validator(mode="after")
    def validate_sweep_bounds(self) -> "Settings":
        if self.SWEEP_NEWTON_START > self.SWEEP_NEWTON_STOP:
            raise ValueError("SWEEP_NEWTON_START must not exceed SWEEP_NEWTON_STOP")
        if self.SWEEP_CRITERION_START > self.SWEEP_CRITERION_STOP:
            raise ValueError("SWEEP_CRITERION_START must not exceed SWEEP_CRITERION_STOP")
        return self

    @property
    def newton_tolerance(self) -> Fraction:
        """Default Newton tolerance as an exact fraction"""
        return parse_fraction(self.NEWTON_TOLERANCE)


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


# Global settings instance
settings = get_settings()
