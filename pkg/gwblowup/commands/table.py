import logging

import click

from gwblowup.commands.context import AppContext
from gwblowup.commands.invariant import status_of
from gwblowup.commands.output import (
    FORMATS,
    make_record,
    render_csv,
    render_json,
    render_plain_row,
)
from gwblowup.services.lattice import table_classes

logger = logging.getLogger(__name__)


@click.command("table")
@click.argument("degree", type=click.IntRange(min=1))
@click.option(
    "--format", "output_format", type=click.Choice(FORMATS), default="plain", show_default=True
)
@click.option("--status", "show_status", is_flag=True, help="Add enumerativity to each row.")
@click.pass_obj
def table(app: AppContext, degree: int, output_format: str, show_status: bool) -> None:
    """List N_{D,alpha} for every alpha >= 2 not excluded by genus or a pair sum > D."""
    classes = table_classes(degree)
    logger.info(f"Degree {degree} table has {len(classes)} rows")

    records = [
        make_record(c, app.engine.invariant(c), status_of(c) if show_status else None)
        for c in classes
    ]
    if output_format == "csv":
        lines = render_csv(records, show_status)
    elif output_format == "json":
        lines = render_json(records, show_status)
    else:
        lines = [render_plain_row(record, show_status) for record in records]
    for line in lines:
        click.echo(line)
