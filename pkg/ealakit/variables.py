"""For fetching environment variables used across all modules"""

import os

from pydantic_settings import BaseSettings, SettingsConfigDict

# Check for an environment variable to determine the environment
env_file = ".env" if os.getenv("ENV") == "prod" else "dev.env"


class Settings(BaseSettings):
    WINDOW: int = 3
    SAMPLES: int = 1000
    SEED: int = 0
    CLOSURE_DEGREE_BOUND: int = 4
    IDEAL_CLOSURE_MAX_ROUNDS: int = 50
    IDEAL_SAMPLES: int = 50
    NILPOTENCY_SAMPLES: int = 24
    LIFT_SAMPLES: int = 20
    CONJUGACY_SAMPLES: int = 10
    LOG_LEVEL: str = "INFO"

    model_config = SettingsConfigDict(
        env_file=env_file, env_file_encoding="utf-8", env_prefix="EALAKIT_"
    )


settings = Settings()
