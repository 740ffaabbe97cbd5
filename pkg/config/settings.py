"""
Application settings and configuration
"""
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Search caps and budgets (defaults only; overridden by CLI flags)"""

    model_config = SettingsConfigDict(case_sensitive=True, validate_assignment=True)

    # Application
    APP_NAME: str = "simplegames"
    APP_VERSION: str = "1.0.0"

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Voter caps
    MAX_ALGEBRA_VOTERS: int = 12  # mask = 4096 bits
    MAX_PERMUTATION_VOTERS: int = 9
    MAX_SEARCH_VOTERS: int = 6  # exact closures and the enumeration oracle
    MAX_BOUNDED_VOTERS: int = 9  # weight/depth <= 2 via layers 0..2
    MAX_BOUNDED_CLOSURE_VOTERS: int = 8
    MAX_QUOTA_VOTERS: int = 8

    # Budgets (deterministic failure when exceeded)
    MAP_SEARCH_BUDGET: int = 2_000_000
    POOL_PAIR_BUDGET: int = 50_000_000
    PLACEMENT_BUDGET: int = 400_000

    # Workers
    THREADS: int = 1
    PERMUTATION_CHUNK: int = 2048

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings,
    ):
        # Flags only: runs must not depend on the environment
        return (init_settings,)

    def apply_overrides(self, **overrides) -> None:
        """Set the non-None CLI overrides on this instance"""
        for key, value in overrides.items():
            if value is not None:
                setattr(self, key, value)


# Create global settings instance
settings = Settings()
