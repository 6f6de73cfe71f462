"""Runtime settings using pydantic-settings."""
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings loaded from PHOTONIC_TMM_* environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="PHOTONIC_TMM_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Sweep parallelism (unset: one worker per CPU)
    threads: int | None = Field(default=None, ge=1)

    log_level: str = "INFO"
    output_dir: str = "output"

    # Validation suite
    validation_cases: int = Field(default=1000, ge=1)
    invariance_cases: int = Field(default=100, ge=1)
    validation_seed: int = 20240917
    resonance_scan_samples: int = Field(default=2001, ge=3)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
