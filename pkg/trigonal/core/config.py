# trigonal/core/config.py
"""
Application configuration and settings
"""
import os

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True, extra="ignore")

    # Application
    APP_NAME: str = "Trigonal dessins"
    APP_VERSION: str = "0.1.0"

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # Root finding
    ROOT_TOLERANCE: float = float(os.getenv("ROOT_TOLERANCE", "1e-12"))
    CLUSTER_TOLERANCE: float = float(os.getenv("CLUSTER_TOLERANCE", "1e-6"))
    MULTIPLICITY_TOLERANCE: float = float(os.getenv("MULTIPLICITY_TOLERANCE", "1e-9"))
    MAX_ITERATIONS: int = int(os.getenv("MAX_ITERATIONS", "500"))
    ROOT_SEED: int = int(os.getenv("ROOT_SEED", "0"))
    SOLVER_RETRIES: int = int(os.getenv("SOLVER_RETRIES", "3"))

    # Dessin tracing
    DEFAULT_RESOLUTION: int = int(os.getenv("DEFAULT_RESOLUTION", "100"))
    MIN_TRACE_STEP: float = float(os.getenv("MIN_TRACE_STEP", "1e-9"))
    MONOCHROME_TOLERANCE: float = float(os.getenv("MONOCHROME_TOLERANCE", "1e-8"))

    # Families
    BISECTION_WIDTH: float = float(os.getenv("BISECTION_WIDTH", "1e-6"))
    WORKERS: int = int(os.getenv("WORKERS", "1"))

    # Combinatorics
    COMBINATORICS_MAX_N: int = int(os.getenv("COMBINATORICS_MAX_N", "12"))

    # Rendering
    SVG_CANVAS: int = int(os.getenv("SVG_CANVAS", "640"))


settings = Settings()
