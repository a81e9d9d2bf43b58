import logging

import click

from gwblowup import cache as cache_io
from gwblowup.commands.context import AppContext
from gwblowup.services.lattice import table_classes

logger = logging.getLogger(__name__)


@click.group("cache")
def cache() -> None:
    """Inspect or fill a cache file."""


@cache.command("info")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
def info(path: str) -> None:
    """Print the record count and highest degree of a cache file."""
    store = cache_io.load(path)
    click.echo(f"records: {len(store)}")
    degrees = [key.d for key in store]
    click.echo(f"max degree: {max(degrees) if degrees else '-'}")


@cache.command("warm")
@click.option("--dmax", type=click.IntRange(min=1), required=True)
@click.pass_obj
def warm(app: AppContext, dmax: int) -> None:
    """Compute every table row up to degree DMAX into the --cache store."""
    if app.cache_path is None:
        raise click.UsageError("cache warm needs the --cache PATH option")
    rows = 0
    for d in range(1, dmax + 1):
        for c in table_classes(d):
            app.engine.invariant(c)
            rows += 1
    logger.info(f"Warmed {rows} rows up to degree {dmax}")
    click.echo(f"computed {rows} rows; store holds {len(app.engine.store)} keys")
