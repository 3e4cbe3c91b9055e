"""Configuration management using Pydantic Settings."""

import logging
import os
from fractions import Fraction
from pathlib import Path

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

# Path constants
XDG_DATA_HOME_DEFAULT = Path("~/.local/share")
BRAIDMONO_DATA_DIR = "braidmono"
CACHE_DB_FILENAME = "braids.db"


def get_xdg_data_home() -> Path:
    """Get XDG_DATA_HOME path, defaulting to ~/.local/share if not set.

    Returns:
        Path to the XDG data home directory.
    """
    xdg_data_home = os.environ.get("XDG_DATA_HOME")
    if xdg_data_home:
        return Path(xdg_data_home).expanduser()
    return XDG_DATA_HOME_DEFAULT.expanduser()


def get_default_cache_db_path() -> Path:
    """Return the default braid cache location under XDG_DATA_HOME."""
    return get_xdg_data_home() / BRAIDMONO_DATA_DIR / CACHE_DB_FILENAME


class Settings(BaseSettings):
    """Application settings with environment variable overrides.

    All settings can be overridden via environment variables with the
    BRAIDMONO_ prefix (handled automatically by pydantic-settings).

    Attributes:
        cache_db_path: Path to the SQLite braid cache.
        cache_enabled: Whether per-lasso braid words are cached on disk.
        precision_bits: Starting working precision for root certification.
        precision_ceiling: Maximal working precision before giving up.
        coset_bound: Default maximal number of cosets for enumeration.
        epimorphism_order_bound: Largest target order for epimorphism search.
        tietze_max_rounds: Iteration limit for presentation simplification.
        tietze_max_relator_length: Relator length limit for simplification.
        max_workers: Number of lassos tracked concurrently.
        projection_tilt: Exact rational tilt of the braid projection frame.
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        env_prefix="BRAIDMONO_",
    )

    # Braid cache
    cache_db_path: Path = Field(default_factory=get_default_cache_db_path)
    cache_enabled: bool = Field(default=True)

    # Numerics
    precision_bits: int = Field(default=64, gt=0)
    precision_ceiling: int = Field(default=4096, gt=0)
    projection_tilt: str = Field(default="1/64")

    # Group theory bounds
    coset_bound: int = Field(default=1_000_000, gt=0)
    epimorphism_order_bound: int = Field(default=120, gt=0)
    tietze_max_rounds: int = Field(default=20, gt=0)
    tietze_max_relator_length: int = Field(default=200, gt=0)

    # Orchestration
    max_workers: int = Field(default=4, gt=0)

    # Logging configuration
    log_level: str = Field(default="INFO")

    @field_validator("cache_db_path", mode="before")
    @classmethod
    def expand_cache_path(cls, v: str | Path) -> Path:
        """Expand tilde in the cache database path."""
        return Path(v).expanduser()

    @field_validator("projection_tilt")
    @classmethod
    def validate_tilt(cls, v: str) -> str:
        """Require an exact rational tilt in (0, 1/4]."""
        tilt = Fraction(v)
        if not 0 < tilt <= Fraction(1, 4):
            raise ValueError(f"projection_tilt must lie in (0, 1/4], got {v}")
        return v

    @model_validator(mode="after")
    def check_precision_order(self) -> "Settings":
        """Ensure the precision ceiling is not below the starting precision."""
        if self.precision_ceiling < self.precision_bits:
            raise ValueError("precision_ceiling must be >= precision_bits")
        return self

    @property
    def tilt(self) -> Fraction:
        """Projection tilt as an exact rational."""
        return Fraction(self.projection_tilt)


# Global settings instance
settings = Settings()
