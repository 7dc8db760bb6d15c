from pydantic_settings import BaseSettings
from typing import List, Optional

from core.errors import InvalidInput


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.
    Copy .env.example to .env to override the defaults.
    """

    # Brute-force oracle
    oracle_cap: int = 10

    # Randomness
    default_seed: int = 0
    mk2_warm_start: bool = True

    # Output
    output_format: str = "text"  # text | json

    # Benchmark
    bench_sizes: List[int] = [100000, 200000, 400000, 800000]
    bench_repeats: int = 3

    # Application Settings
    log_level: str = "WARNING"

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"

    def effective_cap(self, override: Optional[int] = None) -> int:
        """Returns the oracle vertex cap, preferring a command-line override."""
        cap = self.oracle_cap if override is None else override
        if cap < 1:
            raise InvalidInput(f"oracle cap must be >= 1, got {cap}")
        return cap


# Global settings instance
settings = Settings()
