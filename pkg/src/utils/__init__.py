"""
Utils Package

Contains utility functions:
- input_loader: InputLoader for reading generator files (JSON or plain text)
"""

from src.utils.input_loader import InputLoader, ParsedInput

__all__ = [
    "InputLoader",
    "ParsedInput",
]
