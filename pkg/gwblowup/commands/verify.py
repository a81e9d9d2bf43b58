import logging
from typing import Optional

import click

from gwblowup.commands.context import AppContext
from gwblowup.commands.output import format_alpha
from gwblowup.exceptions import VerificationFailure
from gwblowup.services.relations import RelationVerifier

logger = logging.getLogger(__name__)


@click.command("verify")
@click.option("--r", "r", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--dmax", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--nmax", type=click.IntRange(min=0), default=8, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker threads.")
@click.pass_obj
def verify(app: AppContext, r: int, dmax: int, nmax: int, workers: Optional[int]) -> None:
    """Check the associativity relations against computed invariants."""
    workers = workers or app.settings.VERIFY_WORKERS
    report = RelationVerifier(app.engine).verify_relations(r, dmax, nmax, workers=workers)

    click.echo(f"checked {report.instances} instances ({report.nontrivial} nontrivial)")
    if report.ok:
        click.echo("ok")
        return

    for failure in report.failures:
        indices = ",".join(str(i) for i in failure.indices)
        click.echo(
            f"R({indices}) at {failure.d} {format_alpha(failure.alpha)} "
            f"n={failure.n}: residual {failure.residual}"
        )
    raise VerificationFailure(f"{len(report.failures)} nonzero residuals", report)
