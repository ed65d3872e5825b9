"""Runtime settings read from the environment."""

import os
from dotenv import load_dotenv

load_dotenv()


class Config:
    """Application configuration."""

    # Logging
    LOG_LEVEL: str = os.getenv("DOPPLER_KEYGEN_LOG_LEVEL", "INFO").upper()
    DEBUG: bool = os.getenv("DOPPLER_KEYGEN_DEBUG", "False").lower() == "true"

    # Monte Carlo execution
    MAX_WORKERS: int = int(os.getenv("DOPPLER_KEYGEN_MAX_WORKERS", "4"))
    # Durations per work unit; sub-stream boundaries depend on this, not on MAX_WORKERS
    CHUNK_SIZE: int = int(os.getenv("DOPPLER_KEYGEN_CHUNK_SIZE", "2048"))

    # CLI defaults
    DEFAULT_CONFIG_PATH: str = os.getenv(
        "DOPPLER_KEYGEN_CONFIG", "configs/table1.yaml"
    )
    DEFAULT_OUT_DIR: str = os.getenv("DOPPLER_KEYGEN_OUT_DIR", "results")
    PLOTS_ENABLED: bool = os.getenv("DOPPLER_KEYGEN_PLOTS", "True").lower() == "true"

    @property
    def log_level(self) -> str:
        """Effective log level name."""
        return "DEBUG" if self.DEBUG else self.LOG_LEVEL


config = Config()
