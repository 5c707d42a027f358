import os
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

load_dotenv()


def _optional_int(name: str) -> Optional[int]:
    value = os.getenv(name)
    return int(value) if value else None


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    # Application Settings
    APP_NAME: str = "FlopVerify"
    VERSION: str = "1.0.0"
    SCHEMA_VERSION: int = 1
    DEBUG: bool = os.getenv("DEBUG", "False").lower() == "true"

    # Parallelism (None or 1 means sequential). Workers are threads and the
    # BWB sweeps are pure Python, so the GIL serialises them: this caps
    # concurrency for callers embedding the library, it is not a speedup knob.
    FLOP_VERIFY_THREADS: Optional[int] = _optional_int("FLOP_VERIFY_THREADS")

    # Default cutoffs and parameter boxes
    VANISHING_DEGREE_MAX: int = int(os.getenv("VANISHING_DEGREE_MAX", "50"))
    COMPARE_DEGREE_MAX: int = int(os.getenv("COMPARE_DEGREE_MAX", "20"))
    PARAMETER_MAX: int = int(os.getenv("PARAMETER_MAX", "40"))
    PV_PARAMETER_MAX: int = int(os.getenv("PV_PARAMETER_MAX", "30"))

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")


settings = Settings()
