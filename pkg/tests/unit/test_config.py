"""
Unit tests for configuration module
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from rootboard.core.config import Settings, settings

pytestmark = pytest.mark.unit


def test_default_settings():
    """Test default values"""
    defaults = Settings(_env_file=None)
    assert defaults.APP_NAME == "Rootboard"
    assert defaults.LOG_FORMAT == "console"
    assert defaults.NEWTON_MAX_STEPS == 16
    assert defaults.newton_tolerance == Fraction(1, 10 ** 6)
    assert defaults.SEXAGESIMAL_PLACES == 3
    assert (defaults.SWEEP_NEWTON_START, defaults.SWEEP_NEWTON_STOP) == (2, 1023)
    assert (defaults.SWEEP_CRITERION_START, defaults.SWEEP_CRITERION_STOP) == (2, 1_000_000)


def test_environment_override(monkeypatch):
    """Test ROOTBOARD_ prefixed overrides"""
    monkeypatch.setenv("ROOTBOARD_NEWTON_TOLERANCE", "1/1000")
    monkeypatch.setenv("ROOTBOARD_LOG_LEVEL", "debug")
    monkeypatch.setenv("ROOTBOARD_SWEEP_WORKERS", "4")
    overridden = Settings(_env_file=None)
    assert overridden.newton_tolerance == Fraction(1, 1000)
    assert overridden.LOG_LEVEL == "DEBUG"
    assert overridden.SWEEP_WORKERS == 4


def test_settings_validation():
    """Test settings validation"""
    with pytest.raises(ValidationError):
        Settings(_env_file=None, LOG_FORMAT="xml")
    with pytest.raises(ValidationError):
        Settings(_env_file=None, LOG_LEVEL="LOUD")
    with pytest.raises(ValidationError):
        Settings(_env_file=None, NEWTON_TOLERANCE="0.001")
    with pytest.raises(ValidationError):
        Settings(_env_file=None, NEWTON_MAX_STEPS=0)
    with pytest.raises(ValidationError):
        Settings(_env_file=None, SWEEP_CRITERION_START=10, SWEEP_CRITERION_STOP=5)


def test_global_settings_instance():
    assert settings.APP_NAME
    assert settings.NEWTON_MAX_STEPS >= 1
