"""
Configuration management for the Legendre ODE toolkit
"""

import logging
import sys
from typing import Any, Optional

from pydantic import BaseModel, Field, field_validator

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class ComputeConfig(BaseModel):
    """Default bounds and parallelism for exact computations"""

    default_order: int = Field(
        default=20, ge=0, description="Default truncation order M in t"
    )
    default_n_max: int = Field(
        default=10, ge=0, description="Default highest Legendre index n"
    )
    default_big_n_max: int = Field(
        default=4, ge=1, description="Default highest ODE family index N"
    )
    reconcile_n_max: int = Field(
        default=15, ge=1, description="Rows compared in closed-form reconciliation"
    )
    max_workers: int = Field(
        default=1, description="Threads used by the verification suite"
    )

    @field_validator("max_workers")
    @classmethod
    def validate_workers(cls, v: int) -> int:
        if v < 1:
            raise ValueError("max_workers must be at least 1")
        return v


class AppConfig(BaseModel):
    """Application configuration"""

    # Logging
    log_level: str = Field(default="WARNING", description="Logging level")
    log_format: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        description="Log record format",
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        if v.upper() not in VALID_LOG_LEVELS:
            raise ValueError(f"Log level must be one of {VALID_LOG_LEVELS}")
        return v.upper()


class Settings:
    """Global settings manager"""

    def __init__(self):
        self._compute_config: Optional[ComputeConfig] = None
        self._app_config: Optional[AppConfig] = None

    @property
    def compute(self) -> ComputeConfig:
        """Get computation configuration"""
        if self._compute_config is None:
            self._compute_config = ComputeConfig()
        return self._compute_config

    @property
    def app(self) -> AppConfig:
        """Get application configuration"""
        if self._app_config is None:
            self._app_config = AppConfig()
        return self._app_config

    def override(self, **kwargs: Any) -> None:
        """
        Replace individual settings, re-running validation

        Args:
            **kwargs: ComputeConfig or AppConfig fields; None values are ignored

        Raises:
            ValueError: If a field name is unknown or a value fails validation
        """
        compute_updates = {}
        app_updates = {}
        for key, value in kwargs.items():
            if value is None:
                continue
            if key in ComputeConfig.model_fields:
                compute_updates[key] = value
            elif key in AppConfig.model_fields:
                app_updates[key] = value
            else:
                raise ValueError(f"Unknown setting: {key}")

        if compute_updates:
            self._compute_config = ComputeConfig(
                **{**self.compute.model_dump(), **compute_updates}
            )
        if app_updates:
            self._app_config = AppConfig(**{**self.app.model_dump(), **app_updates})

    def configure_logging(self) -> None:
        """Configure root logging to standard error from the app settings"""
        logging.basicConfig(
            level=getattr(logging, self.app.log_level),
            format=self.app.log_format,
            stream=sys.stderr,
        )
        logging.getLogger().setLevel(getattr(logging, self.app.log_level))

    def validate(self) -> bool:
        """Validate all configurations"""
        try:
            _ = self.compute
            _ = self.app
            return True
        except Exception as e:
            logging.getLogger(__name__).error(f"Configuration validation failed: {e}")
            return False


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get or create global settings instance"""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings
