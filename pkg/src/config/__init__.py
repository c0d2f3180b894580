"""
Configuration Package

Contains configuration utilities:
- logger: Logging setup with file rotation
- exception: Application exception hierarchy with CLI exit codes
- settings: Environment-driven runtime settings
"""

from src.config.logger import setup_logger
from src.config.exception import (
    AppException,
    BasepointError,
    ClassificationError,
    DimensionError,
    ImplicitizationError,
    InvalidIdealError,
    NotDivisibleError,
    ParseError,
    WindowExhaustedError,
    error_message_detail,
)
from src.config.settings import Settings, get_settings, parse_window

__all__ = [
    "setup_logger",
    "AppException",
    "BasepointError",
    "ClassificationError",
    "DimensionError",
    "ImplicitizationError",
    "InvalidIdealError",
    "NotDivisibleError",
    "ParseError",
    "WindowExhaustedError",
    "error_message_detail",
    "Settings",
    "get_settings",
    "parse_window",
]
