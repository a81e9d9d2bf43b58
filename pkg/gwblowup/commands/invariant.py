import logging
from typing import Optional

import click

from gwblowup.commands.context import AppContext
from gwblowup.commands.output import (
    FORMATS,
    make_record,
    render_csv,
    render_json,
    render_status,
)
from gwblowup.exceptions import UndefinedInvariantError
from gwblowup.models.curve import CurveClass
from gwblowup.models.status import EnumStatus
from gwblowup.services.cremona import enumerativity
from gwblowup.validators import validate_class_query

logger = logging.getLogger(__name__)


def status_of(c: CurveClass) -> Optional[EnumStatus]:
    """Enumerativity of c, or None where the classifier does not apply."""
    if c.d <= 0 or any(a < 0 for a in c.alpha) or c.expected_dim < 0:
        return None
    return enumerativity(c)


@click.command("invariant")
@click.argument("degree")
@click.argument("alpha")
@click.option(
    "--zero-if-undefined",
    is_flag=True,
    help="Print 0 instead of failing when the expected dimension is negative.",
)
@click.option("--status", "show_status", is_flag=True, help="Also print enumerativity.")
@click.option(
    "--format", "output_format", type=click.Choice(FORMATS), default="plain", show_default=True
)
@click.pass_obj
def invariant(
    app: AppContext,
    degree: str,
    alpha: str,
    zero_if_undefined: bool,
    show_status: bool,
    output_format: str,
) -> None:
    """Print N_{D,ALPHA}; ALPHA is comma-separated, "" for none."""
    c = validate_class_query(degree, alpha)
    logger.info(f"Computing N{c}")

    if c.expected_dim < 0:
        if not zero_if_undefined:
            raise UndefinedInvariantError(c)
        value = 0
    else:
        value = app.engine.invariant(c)

    record = make_record(c, value, status_of(c) if show_status else None)
    if output_format == "csv":
        lines = render_csv([record], show_status)
    elif output_format == "json":
        lines = render_json([record], show_status)
    else:
        lines = [record.N]
        if show_status:
            lines.append(render_status(record))
    for line in lines:
        click.echo(line)
