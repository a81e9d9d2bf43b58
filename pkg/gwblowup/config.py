from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict

from gwblowup import __version__


class Settings(BaseSettings):
    """gwblowup settings, read from ``GWBLOWUP_*`` variables and ``.env``."""

    APP_NAME: str = "gwblowup"
    DEBUG: bool = False
    VERSION: str = __version__

    LOG_LEVEL: str = "WARNING"

    # CLI engine defaults; EngineConfig() itself keeps shortcuts off
    USE_VANISHING_SHORTCUTS: bool = True
    PIVOT_RULE: str = "largest"
    ORBIT_SPLITS: bool = True

    VERIFY_WORKERS: int = 1

    model_config = SettingsConfigDict(
        env_prefix="GWBLOWUP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


@lru_cache
def get_settings() -> Settings:
    """Settings, read once per process."""
    return Settings()
