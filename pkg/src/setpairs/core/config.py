"""
Runtime settings - defaults, .env file and SETPAIRS_* environment overrides

Precedence (lowest to highest): defaults < .env < process environment < CLI flags.
"""

import os
from pathlib import Path

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

ENV_PREFIX = "SETPAIRS_"

# Mersenne prime 2^31 - 1: large enough for general position, small enough for int64 products
DEFAULT_FIELD_PRIME = 2_147_483_647


class Settings(BaseModel):
    """
    Effective defaults for certificates and search

    Attributes:
        field_prime: Prime modulus of the coefficient field
        seed: Seed for every random choice (general position, projections)
        node_budget: Maximum number of search states expanded
        time_budget_s: Wall-clock budget for one search
        max_tries: Retry cap of the general position sampler
        log_level: loguru level for the CLI sink
    """

    field_prime: int = Field(DEFAULT_FIELD_PRIME, ge=2)
    seed: int = Field(0, ge=0)
    node_budget: int = Field(5_000_000, ge=1)
    time_budget_s: float = Field(600.0, gt=0)
    max_tries: int = Field(5, ge=1)
    log_level: str = "INFO"

    model_config = ConfigDict(frozen=True)


# Settings field -> environment variable suffix
_ENV_FIELDS = {
    "field_prime": "FIELD_PRIME",
    "seed": "SEED",
    "node_budget": "NODE_BUDGET",
    "time_budget_s": "TIME_BUDGET",
    "max_tries": "MAX_TRIES",
    "log_level": "LOG_LEVEL",
}


def load_settings(env_file: str | Path | None = None) -> Settings:
    """
    Load settings from an optional .env file and the environment

    Args:
        env_file: Explicit .env path (None = search upwards from the cwd)

    Returns:
        Validated Settings (pydantic coerces the string values)
    """
    load_dotenv(dotenv_path=env_file, override=False)

    overrides: dict[str, str] = {}
    for field, suffix in _ENV_FIELDS.items():
        value = os.environ.get(ENV_PREFIX + suffix)
        if value is not None and value.strip():
            overrides[field] = value.strip()

    return Settings.model_validate(overrides)
