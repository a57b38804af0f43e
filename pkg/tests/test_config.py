"""
Tests for configuration management
"""

import logging

import pytest
from pydantic import ValidationError

from src.config import AppConfig, ComputeConfig, get_settings


@pytest.fixture(autouse=True)
def reset_settings():
    """Reset settings singleton before each test"""
    import src.config as config

    config._settings = None
    yield
    config._settings = None


class TestComputeConfig:
    """Test suite for ComputeConfig"""

    def test_defaults(self):
        """Test default bounds"""
        config = ComputeConfig()
        assert config.default_order == 20
        assert config.default_n_max == 10
        assert config.default_big_n_max == 4
        assert config.reconcile_n_max == 15
        assert config.max_workers == 1

    def test_worker_validation(self):
        """Test that at least one worker is required"""
        with pytest.raises(ValidationError):
            ComputeConfig(max_workers=0)

    def test_bound_validation(self):
        """Test that family index and order bounds are checked"""
        with pytest.raises(ValidationError):
            ComputeConfig(default_big_n_max=0)
        with pytest.raises(ValidationError):
            ComputeConfig(default_order=-1)


class TestAppConfig:
    """Test suite for AppConfig"""

    def test_log_level_normalized(self):
        """Test log level case normalization"""
        assert AppConfig().log_level == "WARNING"
        assert AppConfig(log_level="debug").log_level == "DEBUG"

    def test_log_level_validation(self):
        """Test that unknown log levels are rejected"""
        with pytest.raises(ValidationError):
            AppConfig(log_level="LOUD")


class TestSettings:
    """Test suite for the settings manager"""

    def test_singleton(self):
        """Test that get_settings returns one instance"""
        assert get_settings() is get_settings()
        assert get_settings().validate()

    def test_override(self):
        """Test replacing individual settings"""
        settings = get_settings()
        settings.override(max_workers=3, log_level="info", default_order=None)
        assert settings.compute.max_workers == 3
        assert settings.compute.default_order == 20
        assert settings.app.log_level == "INFO"

    def test_override_validation(self):
        """Test that overrides are validated"""
        settings = get_settings()
        with pytest.raises(ValueError):
            settings.override(max_workers=0)
        with pytest.raises(ValueError):
            settings.override(colour="blue")
        assert settings.compute.max_workers == 1

    def test_configure_logging(self):
        """Test that the root logger follows the configured level"""
        settings = get_settings()
        settings.override(log_level="ERROR")
        settings.configure_logging()
        assert logging.getLogger().level == logging.ERROR


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
