import sys
import logging
from typing import Optional


def error_message_detail(error: Exception, error_detail: sys) -> str:
    """
    Extract detailed error information including file name, line number, and the error message.

    Args:
        error (Exception): The exception that occurred.
        error_detail (sys): The sys module to access traceback details.

    Returns:
        str: Formatted error message string.
    """
    exc_type, exc_value, exc_tb = error_detail.exc_info()

    if exc_tb is not None:
        file_name = exc_tb.tb_frame.f_code.co_filename
        line_number = exc_tb.tb_lineno
        error_message = (
            f"Error occurred in file: [{file_name}] "
            f"at line number [{line_number}] "
            f"with error: {str(error)}"
        )
    else:
        error_message = f"Error occurred: {str(error)} (no traceback available)"

    logging.getLogger("bisurf").debug(error_message)
    return error_message


class AppException(Exception):
    """
    Application-level exception for standardized error handling.

    ``exit_code`` is the process status the CLI returns when the exception
    reaches the command dispatcher.
    """

    exit_code: int = 1

    def __init__(self, error_message, error_detail: sys = sys):
        """
        Args:
            error_message: A string (or exception) describing the error.
            error_detail (sys): The sys module to access traceback details.
        """
        super().__init__(str(error_message))
        self.reason = str(error_message)
        self.error_message = error_message_detail(error_message, error_detail)
        if isinstance(error_message, AppException):
            self.reason = error_message.reason
            self.exit_code = error_message.exit_code

    def __str__(self) -> str:
        return self.error_message

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.reason!r})"


class ParseError(AppException):
    """Polynomial text that does not follow the grammar or is not bihomogeneous."""

    exit_code = 2

    def __init__(self, error_message: str, position: Optional[int] = None, error_detail: sys = sys):
        if position is not None:
            error_message = f"{error_message} at position {position}"
        super().__init__(error_message, error_detail)
        self.position = position


class InvalidIdealError(AppException):
    """Generators with the wrong bidegree or count, or linearly dependent."""

    exit_code = 3


class BasepointError(AppException):
    """An operation that needs a basepoint-free ideal received one with basepoints."""

    exit_code = 4

    def __init__(self, error_message: str, witness: Optional[str] = None, error_detail: sys = sys):
        if witness is not None:
            error_message = f"{error_message} (witness: {witness})"
        super().__init__(error_message, error_detail)
        self.witness = witness


class DimensionError(AppException):
    """Shapes or bidegrees that do not fit together."""


class NotDivisibleError(AppException):
    """Exact division of forms failed."""


class WindowExhaustedError(AppException):
    """Minimal syzygies reach the boundary of the search window."""


class ClassificationError(AppException):
    """Syzygy data contradicting the classification; signals an internal bug."""


class ImplicitizationError(AppException):
    """The determinantal implicit equation failed one of its consistency checks."""
