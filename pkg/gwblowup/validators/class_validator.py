"""Validator for curve class arguments (``D ALPHA``)."""

import re
from typing import Dict, Tuple

from gwblowup.models.curve import CurveClass

DEGREE_PATTERN = re.compile(r"^-?\d+$")
ALPHA_PATTERN = re.compile(r"^-?\d+(?:,-?\d+)*$")


class ValidationError(Exception):
    """Argument errors keyed by field name."""

    def __init__(self, errors: Dict[str, str]):
        self.errors = errors
        super().__init__("; ".join(f"{field}: {message}" for field, message in errors.items()))


def validate_degree(text: str) -> Tuple[bool, str, int]:
    """
    Validate the degree argument.
    Returns (is_valid, error_message, degree).
    """
    text = text.strip()
    if not DEGREE_PATTERN.match(text):
        return False, f"degree must be an integer, got {text!r}", 0
    return True, "", int(text)


def validate_alpha(text: str) -> Tuple[bool, str, Tuple[int, ...]]:
    """
    Validate a comma-separated multiplicity list; the empty string is alpha = ().
    Returns (is_valid, error_message, alpha).
    """
    if text == "":
        return True, "", ()
    if not ALPHA_PATTERN.match(text):
        return (
            False,
            f"multiplicities must be comma-separated integers without spaces, got {text!r}",
            (),
        )
    return True, "", tuple(int(part) for part in text.split(","))


def parse_alpha(text: str) -> Tuple[int, ...]:
    """Parse ALPHA or raise ValidationError."""
    valid, error, alpha = validate_alpha(text)
    if not valid:
        raise ValidationError({"alpha": error})
    return alpha


def validate_class_query(degree: str, alpha: str) -> CurveClass:
    """
    Validate a ``D ALPHA`` pair.

    Returns the curve class if valid.
    Raises ValidationError naming every malformed field.
    """
    errors: Dict[str, str] = {}

    valid, error, d = validate_degree(degree)
    if not valid:
        errors["degree"] = error

    valid, error, parsed = validate_alpha(alpha)
    if not valid:
        errors["alpha"] = error

    if errors:
        raise ValidationError(errors)

    return CurveClass(d, parsed)
