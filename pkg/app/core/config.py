from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # API Configuration
    API_V1_STR: str = "/api"
    PROJECT_NAME: str = "del Pezzo Seshadri Constants"
    VERSION: str = "1.0.0"

    # Oracle and scans
    ORACLE_DMAX: int = 12
    POSITIVITY_DMAX: int = 12
    X9_THRESHOLD_DMAX: int = 12
    FAMILY_MAX_M: int = 50

    # Cubic pencil sampling
    PENCIL_SAMPLE_HEIGHT: int = 7
    PENCIL_MAX_ATTEMPTS: int = 20

    # Result cache (HTTP surface only)
    REDIS_URL: str = "redis://localhost:6379/0"
    CACHE_ENABLED: bool = True
    CACHE_TTL_RESULTS: int = 604800  # 7 days, results never go stale

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_JSON: bool = False

    class Config:
        env_file = ".env"


settings = Settings()
