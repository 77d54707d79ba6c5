"""
Application configuration settings
"""
import os
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings"""

    # App Configuration
    APP_NAME: str = "coxinv"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False
    LOG_LEVEL: str = "INFO"
    HOST: str = "0.0.0.0"
    PORT: int = 8000

    # Desk-scale guards
    ALLOW_LARGE: bool = False
    ORACLE_MAX_LETTERS_A: int = 9
    ORACLE_MAX_RANK_BD: int = 7
    ORACLE_HARD_LIMIT: int = 5_000_000  # involutions held at once
    ENUMERATION_BUDGET: int = 60_000  # group elements, H3/F4/H4/E6
    LARGE_ENUMERATION_BUDGET: int = 3_000_000  # E7

    # Recurrence self-check
    SELF_CHECK_ENABLED: bool = True
    SELF_CHECK_MAX_RANK: int = 12

    # Conjecture scan scope
    SCAN_MAX_RANK: int = 10
    SCAN_DIHEDRAL_MAX: int = 12

    RANDOM_SEED: int = 20240607

    # Embedded tables
    DATA_DIR: str = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data")

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = 'ignore'


# Global settings instance
settings = Settings()
