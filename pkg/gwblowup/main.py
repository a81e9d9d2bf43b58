import logging
import sys
from typing import Any, Optional, Sequence

import click
from dotenv import load_dotenv

from gwblowup.cache import open_store
from gwblowup.cli_errors import EXIT_OK, handle_exception
from gwblowup.commands import cache, cremona, invariant, table, verify
from gwblowup.commands.context import AppContext
from gwblowup.config import Settings, get_settings
from gwblowup.services.engine import EngineConfig, InvariantEngine, PivotRule
from gwblowup.store import MemoStore

logger = logging.getLogger(__name__)


def configure_logging(settings: Settings, verbose: int) -> None:
    """Set the root log level from -v or the LOG_LEVEL setting."""
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


def print_version(ctx: click.Context, _param: click.Parameter, value: bool) -> None:
    """Print "APP_NAME, version VERSION" from the settings and exit."""
    if not value or ctx.resilient_parsing:
        return
    settings = get_settings()
    click.echo(f"{settings.APP_NAME}, version {settings.VERSION}")
    ctx.exit()


class GwGroup(click.Group):
    """Command group that owns the exception to exit-code translation."""

    def main(
        self,
        args: Optional[Sequence[str]] = None,
        prog_name: Optional[str] = None,
        complete_var: Optional[str] = None,
        standalone_mode: bool = True,
        **extra: Any,
    ) -> Any:
        try:
            rv = super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
        except Exception as exc:
            sys.exit(handle_exception(exc))
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


@click.group(cls=GwGroup)
@click.option(
    "--cache",
    "cache_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Load memoized invariants from PATH and save them back on exit.",
)
@click.option("--shortcuts/--no-shortcuts", default=None, help="Vanishing shortcuts.")
@click.option(
    "--pivot-rule",
    type=click.Choice([rule.value for rule in PivotRule]),
    default=None,
    help="Entry R(i) is solved at.",
)
@click.option(
    "--orbit-splits/--literal-splits",
    default=None,
    help="Enumerate splits up to permutations of equal entries.",
)
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logs.")
@click.option(
    "--version",
    is_flag=True,
    expose_value=False,
    is_eager=True,
    callback=print_version,
    help="Show the version and exit.",
)
@click.pass_context
def cli(
    ctx: click.Context,
    cache_path: Optional[str],
    shortcuts: Optional[bool],
    pivot_rule: Optional[str],
    orbit_splits: Optional[bool],
    verbose: int,
) -> None:
    """Gromov-Witten invariants of the plane blown up at points."""
    load_dotenv()
    settings = get_settings()
    configure_logging(settings, verbose)

    overrides = {
        "use_vanishing_shortcuts": shortcuts,
        "pivot_rule": PivotRule(pivot_rule) if pivot_rule is not None else None,
        "orbit_splits": orbit_splits,
    }
    config = EngineConfig.from_settings(settings).model_copy(
        update={key: value for key, value in overrides.items() if value is not None}
    )

    store = MemoStore()
    if cache_path is not None:
        store = ctx.with_resource(open_store(cache_path))
        logger.info(f"Using cache {cache_path} with {len(store)} records")

    logger.debug(f"Engine configuration: {config}")
    ctx.obj = AppContext(
        settings=settings, engine=InvariantEngine(store, config), cache_path=cache_path
    )


cli.add_command(invariant.invariant)
cli.add_command(table.table)
cli.add_command(verify.verify)
cli.add_command(cremona.cremona)
cli.add_command(cache.cache)


def main() -> None:
    """Entry point of the gwblowup command."""
    cli(prog_name="gwblowup")
