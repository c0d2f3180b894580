"""
Runtime settings read from the environment (and a local .env file).

BISURF_WINDOW      resolution search window "a,b" (default 6,5)
BISURF_LOG_DIR     directory for rotating log files (default logs)
BISURF_LOG_LEVEL   console log level (default WARNING)
BISURF_PAIRING     dual pairing for u-perp pullbacks: evaluation | coefficient
"""

import os
import sys
from functools import lru_cache
from typing import Tuple

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from src.config.exception import AppException

DEFAULT_WINDOW: Tuple[int, int] = (6, 5)
PAIRINGS = ("evaluation", "coefficient")


def parse_window(text: str) -> Tuple[int, int]:
    """Parse "a,b" into a pair of non-negative integers."""
    try:
        parts = [int(piece) for piece in text.replace(" ", "").split(",")]
    except ValueError:
        raise AppException(f"malformed window {text!r}, expected 'a,b'", sys)
    if len(parts) != 2 or min(parts) < 0:
        raise AppException(f"malformed window {text!r}, expected 'a,b'", sys)
    return parts[0], parts[1]


class Settings(BaseModel):
    window: Tuple[int, int] = DEFAULT_WINDOW
    log_dir: str = "logs"
    console_log_level: str = "WARNING"
    pairing: str = Field(default="evaluation")

    @field_validator("pairing")
    @classmethod
    def _known_pairing(cls, value: str) -> str:
        value = value.lower()
        if value not in PAIRINGS:
            raise ValueError(f"pairing must be one of {PAIRINGS}, got {value!r}")
        return value


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    load_dotenv()
    window = os.getenv("BISURF_WINDOW")
    try:
        return Settings(
            window=parse_window(window) if window else DEFAULT_WINDOW,
            log_dir=os.getenv("BISURF_LOG_DIR", "logs"),
            console_log_level=os.getenv("BISURF_LOG_LEVEL", "WARNING").upper(),
            pairing=os.getenv("BISURF_PAIRING", "evaluation"),
        )
    except ValueError as e:
        raise AppException(e, sys)
