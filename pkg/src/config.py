from pydantic import Field, field_validator
from pydantic_settings import BaseSettings
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

class Settings(BaseSettings):
    # Numeric Configuration
    ROD_FLAT_PRECISION: int = 64  # significand bits, ~19 digits
    DEFAULT_SERIES_ORDER: int = 20
    ORACLE_LIMIT: int = 120  # largest a+b checked against extended Euclid

    # Motion Planning Configuration
    DEFAULT_PLAN_ORDER: int = 15
    DEFAULT_PLAN_GRID: int = 401
    DEFAULT_SIGMA: float = Field(2.0, gt=1.0)

    # Execution Configuration
    EXPERIMENT_JOBS: int = Field(1, ge=1)
    BENCH_REPETITIONS: int = Field(3, ge=3)

    # Logging Configuration
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "console"

    @field_validator("ROD_FLAT_PRECISION")
    @classmethod
    def validate_precision(cls, v):
        """Float mode never drops below double precision."""
        if v < 53:
            raise ValueError("ROD_FLAT_PRECISION must be at least 53 bits")
        return v

    @field_validator("LOG_FORMAT")
    @classmethod
    def validate_log_format(cls, v):
        """Validate log renderer name."""
        if v not in ("json", "console"):
            raise ValueError("LOG_FORMAT must be 'json' or 'console'")
        return v

    class Config:
        env_file = ".env"
        case_sensitive = True

# Create settings instance
settings = Settings()

# Export settings as module-level variables
ROD_FLAT_PRECISION = settings.ROD_FLAT_PRECISION
DEFAULT_SERIES_ORDER = settings.DEFAULT_SERIES_ORDER
ORACLE_LIMIT = settings.ORACLE_LIMIT
DEFAULT_PLAN_ORDER = settings.DEFAULT_PLAN_ORDER
DEFAULT_PLAN_GRID = settings.DEFAULT_PLAN_GRID
DEFAULT_SIGMA = settings.DEFAULT_SIGMA
EXPERIMENT_JOBS = settings.EXPERIMENT_JOBS
BENCH_REPETITIONS = settings.BENCH_REPETITIONS
LOG_LEVEL = settings.LOG_LEVEL
LOG_FORMAT = settings.LOG_FORMAT
