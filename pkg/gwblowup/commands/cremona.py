import logging

import click

from gwblowup.commands.context import AppContext
from gwblowup.commands.output import format_class
from gwblowup.exceptions import VerificationFailure
from gwblowup.services.cremona import (
    cremona_chain,
    cremona_reduce,
    cremona_step,
    enumerativity,
)
from gwblowup.validators import validate_class_query

logger = logging.getLogger(__name__)


@click.command("cremona")
@click.argument("degree")
@click.argument("alpha")
@click.option("--check", is_flag=True, help="Compare the invariants of both classes.")
@click.option("--chain", "show_chain", is_flag=True, help="Print every reduction step.")
@click.option("--status", "show_status", is_flag=True, help="Print enumerativity.")
@click.pass_obj
def cremona(
    app: AppContext,
    degree: str,
    alpha: str,
    check: bool,
    show_chain: bool,
    show_status: bool,
) -> None:
    """Apply the Cremona transformation at the three largest entries."""
    c = validate_class_query(degree, alpha)
    chain = cremona_chain(c)
    transformed = cremona_step(c) or chain[0]

    click.echo(f"transformed: {format_class(transformed)}")
    click.echo(f"reduced: {format_class(cremona_reduce(c))}")
    if show_chain:
        for link in chain:
            click.echo(f"chain: {format_class(link)}")
    if show_status:
        click.echo(f"status: {enumerativity(c)}")

    if check:
        original = app.engine.invariant(c)
        image = app.engine.invariant(transformed)
        verdict = "equal" if original == image else "differ"
        click.echo(f"check: {original} {image} {verdict}")
        if original != image:
            logger.warning(f"N{c} = {original} but N{transformed} = {image}")
            raise VerificationFailure(f"Cremona check failed for {format_class(c)}")
