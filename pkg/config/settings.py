"""
Configuration settings for the internal degree laboratory.

Loads configuration from environment variables using Pydantic Settings.
"""

from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # -------------------------------------------------------------------------
    # Logging
    # -------------------------------------------------------------------------
    log_level: str = Field(
        default="INFO",
        description="Logging level (DEBUG, INFO, WARN, ERROR)",
    )
    log_format: str = Field(
        default="text",
        description="Log format (json or text)",
    )

    # -------------------------------------------------------------------------
    # Solver Defaults
    # -------------------------------------------------------------------------
    workers: int = Field(
        default=1,
        ge=1,
        le=64,
        description="Worker processes used by the enumeration and branch-and-bound solvers",
    )
    split_factor: int = Field(
        default=4,
        ge=1,
        le=64,
        description="Subproblems created per worker when splitting a search",
    )
    budget_nodes: Optional[int] = Field(
        default=None,
        ge=0,
        description="Default node limit of a search budget (None = unbounded)",
    )
    budget_seconds: Optional[float] = Field(
        default=None,
        ge=0.0,
        description="Default time limit of a search budget in seconds (None = unbounded)",
    )

    # -------------------------------------------------------------------------
    # Verification
    # -------------------------------------------------------------------------
    enumeration_threshold: int = Field(
        default=1_000_000,
        ge=0,
        description="verify enumerates all trees when the spanning-tree count is at most this",
    )
    certificate_sample_size: int = Field(
        default=100,
        ge=0,
        le=100_000,
        description="Random spanning trees checked against the role certificate on large graphs",
    )
    sample_seed: int = Field(
        default=0,
        description="Seed of the random spanning-tree sampler",
    )

    # -------------------------------------------------------------------------
    # Constructions & Star Factors
    # -------------------------------------------------------------------------
    regular_max_attempts: int = Field(
        default=10_000,
        ge=1,
        description="Pairings tried by the random regular builder before giving up",
    )
    star_bound_c: float = Field(
        default=1.0,
        gt=0.0,
        description="Constant c of the star-size lower bound c * (d / ln d) ** (1/3)",
    )

    # -------------------------------------------------------------------------
    # Reports
    # -------------------------------------------------------------------------
    report_include_timing: bool = Field(
        default=True,
        description="Include wall time in reports (disable for byte-stable output)",
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARN", "WARNING", "ERROR", "CRITICAL"]
        v_upper = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {valid_levels}")
        return v_upper

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        """Validate log format."""
        valid_formats = ["json", "text"]
        v_lower = v.lower()
        if v_lower not in valid_formats:
            raise ValueError(f"Invalid log format: {v}. Must be one of {valid_formats}")
        return v_lower

    def default_budget(self) -> "SearchBudget":
        """
        Build the search budget implied by the configured limits.

        Returns:
            SearchBudget with the configured node and time limits
        """
        from src.models.inputs import SearchBudget

        return SearchBudget(node_limit=self.budget_nodes, time_limit=self.budget_seconds)


# Singleton instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get singleton settings instance.

    Returns:
        Settings instance
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next get_settings() re-reads the environment."""
    global _settings
    _settings = None
