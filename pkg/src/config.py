"""
Configuration module - Load environment variables and settings
"""

import logging
import os
from pathlib import Path
from dotenv import load_dotenv

# Load .env file from project root
PROJECT_ROOT = Path(__file__).parent.parent
load_dotenv(PROJECT_ROOT / ".env")

_TRUTHY = {"1", "true", "yes", "y", "on"}


def _env_int(name: str, default: int) -> int:
    try:
        return int(os.getenv(name, str(default)))
    except ValueError:
        return default


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in _TRUTHY


class Config:
    """Application configuration from environment variables"""

    # Witness search
    # Graphs above the limit only get the size-bounded phases of the search.
    ACKKIT_LIMIT_N: int = _env_int("ACKKIT_LIMIT_N", 24)
    # The brute oracle solves one linear system per subset, keep it small.
    ACKKIT_ORACLE_LIMIT_N: int = _env_int("ACKKIT_ORACLE_LIMIT_N", 16)

    # Batch runner
    ACKKIT_WORKERS: int = _env_int("ACKKIT_WORKERS", 1)

    # Catalog load-time checksums (kernel vectors + nullity)
    ACKKIT_CATALOG_CHECKS: bool = _env_bool("ACKKIT_CATALOG_CHECKS", True)

    # Debug
    DEBUG: bool = _env_bool("DEBUG", False)
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO").strip().upper()

    @classmethod
    def reload(cls) -> None:
        """Re-read the environment (used by tests and the CLI after flag parsing)."""
        cls.ACKKIT_LIMIT_N = _env_int("ACKKIT_LIMIT_N", 24)
        cls.ACKKIT_ORACLE_LIMIT_N = _env_int("ACKKIT_ORACLE_LIMIT_N", 16)
        cls.ACKKIT_WORKERS = _env_int("ACKKIT_WORKERS", 1)
        cls.ACKKIT_CATALOG_CHECKS = _env_bool("ACKKIT_CATALOG_CHECKS", True)
        cls.DEBUG = _env_bool("DEBUG", False)
        cls.LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").strip().upper()

    @classmethod
    def validate(cls) -> list[str]:
        """Validate configuration. Returns list of problems (empty when valid)."""
        problems = []

        if cls.ACKKIT_LIMIT_N < 1:
            problems.append(f"ACKKIT_LIMIT_N (must be >= 1, got {cls.ACKKIT_LIMIT_N})")
        if cls.ACKKIT_ORACLE_LIMIT_N < 1:
            problems.append(
                f"ACKKIT_ORACLE_LIMIT_N (must be >= 1, got {cls.ACKKIT_ORACLE_LIMIT_N})"
            )
        if cls.ACKKIT_WORKERS < 1:
            problems.append(f"ACKKIT_WORKERS (must be >= 1, got {cls.ACKKIT_WORKERS})")
        if not isinstance(logging.getLevelName(cls.LOG_LEVEL), int):
            problems.append(f"LOG_LEVEL (unsupported: {cls.LOG_LEVEL})")

        return problems


# Singleton instance
config = Config()
