"""Translation of exceptions into messages and process exit codes."""

import logging
import traceback

import click

from gwblowup.config import get_settings
from gwblowup.exceptions import (
    GwBlowupError,
    RecursionConsistencyError,
    UndefinedInvariantError,
    VerificationFailure,
)
from gwblowup.validators import ValidationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNDEFINED = 2
EXIT_VERIFICATION = 3
EXIT_CONSISTENCY = 4


def exit_code_for(exc: BaseException) -> int:
    """Exit code for an exception raised by a command."""
    if isinstance(exc, UndefinedInvariantError):
        return EXIT_UNDEFINED
    if isinstance(exc, VerificationFailure):
        return EXIT_VERIFICATION
    if isinstance(exc, RecursionConsistencyError):
        return EXIT_CONSISTENCY
    return EXIT_USAGE


def handle_exception(exc: BaseException) -> int:
    """Print ``exc`` to stderr and return the exit code it maps to."""
    if isinstance(exc, click.ClickException):
        exc.show()
        return EXIT_USAGE
    if isinstance(exc, click.Abort):
        click.echo("Aborted!", err=True)
        return EXIT_USAGE

    settings = get_settings()
    if isinstance(exc, (GwBlowupError, ValidationError, ValueError, IndexError)):
        message = str(exc)
    else:
        logger.exception(f"Unhandled error: {exc}")
        message = f"internal error: {exc}" if settings.DEBUG else "internal error"

    click.echo(f"Error: {message}", err=True)
    if settings.DEBUG:
        click.echo(
            "".join(traceback.format_exception(type(exc), exc, exc.__traceback__)),
            err=True,
        )
    return exit_code_for(exc)
