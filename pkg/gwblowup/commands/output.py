"""Rendering of invariant rows as plain text, csv or JSON lines."""

import csv
import io
from typing import Iterable, Optional

from gwblowup.models.curve import CurveClass
from gwblowup.models.status import EnumStatus
from gwblowup.schemas.output import InvariantRecord

FORMATS = ("plain", "csv", "json")


def format_alpha(alpha: Iterable[int]) -> str:
    """Comma-separated entries; the empty sequence is spelled ``""``."""
    text = ",".join(str(a) for a in alpha)
    return text or '""'


def format_class(c: CurveClass) -> str:
    """D and ALPHA separated by a space."""
    return f"{c.d} {format_alpha(c.alpha)}"


def make_record(
    c: CurveClass, value: int, status: Optional[EnumStatus] = None
) -> InvariantRecord:
    """Output row for c, with status fields when a status is given."""
    record = InvariantRecord(d=c.d, alpha=list(c.alpha), N=str(value))
    if status is not None:
        record.status = status.label
        record.reason = status.reason.value if status.reason else None
    return record


def render_plain_row(record: InvariantRecord, with_status: bool) -> str:
    """D ALPHA N, optionally followed by the status."""
    line = f"{record.d} {format_alpha(record.alpha)} {record.N}"
    if with_status:
        line += f" {_status_text(record)}"
    return line


def render_status(record: InvariantRecord) -> str:
    """The status line printed below a plain value."""
    return f"status: {_status_text(record)}"


def render_csv(records: list[InvariantRecord], with_status: bool) -> list[str]:
    """Header plus one csv line per record."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = ["d", "alpha", "N"]
    if with_status:
        header += ["status", "reason"]
    writer.writerow(header)
    for record in records:
        row = [record.d, ",".join(str(a) for a in record.alpha), record.N]
        if with_status:
            row += [record.status or "n/a", record.reason or ""]
        writer.writerow(row)
    return buffer.getvalue().splitlines()


def render_json(records: list[InvariantRecord], with_status: bool) -> list[str]:
    """One JSON object per record; status and reason are null when not known."""
    exclude = None if with_status else {"status", "reason"}
    return [record.model_dump_json(exclude=exclude) for record in records]


def _status_text(record: InvariantRecord) -> str:
    if record.status is None:
        return "n/a"
    if record.reason is None:
        return record.status
    return f"{record.status} ({record.reason})"
