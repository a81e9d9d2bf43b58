"""Validators module for command-line arguments."""

from .class_validator import ValidationError, parse_alpha, validate_class_query

__all__ = ["ValidationError", "parse_alpha", "validate_class_query"]
