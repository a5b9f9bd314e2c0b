"""Configuration management using environment variables."""
import os
from dotenv import load_dotenv

load_dotenv()


class Settings:
    """Application settings.

    Only ambient concerns (logging, archive location) are read from the
    environment. Search parameters are plain constants overridden by CLI flags.
    """

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO").upper()

    # Claim-run archive
    RESULTS_DATABASE_URL: str = os.getenv("RESULTS_DATABASE_URL", "sqlite:///rainbow_claims.db")

    # Search defaults
    DEFAULT_SEARCH_BUDGET: int = 5_000_000  # backtracking nodes
    DEFAULT_THREADS: int = 1
    DEFAULT_SEED: int = 20190101  # randomized property corpora only

    # Hard caps
    BALANCE_MAX_N: int = 20
    MAX_CONSTRUCTION_S: int = 20
    MAX_TREE_EDGES: int = 12
    MAX_STICK_LENGTH: int = 12


settings = Settings()
