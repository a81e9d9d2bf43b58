"""Line-oriented persistence of the memo store.

The first line is the header ``gwblowup-cache v1``; every further line is
one compact JSON record ``{"d":3,"alpha":[],"N":"12"}``, sorted by
(d, alpha). Equal stores produce byte-identical files.
"""

import logging
import os
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Union

from pydantic import ValidationError

from gwblowup.exceptions import CacheFormatError, CacheWriteError
from gwblowup.schemas.cache import CacheRecord
from gwblowup.store import MemoStore

logger = logging.getLogger(__name__)

HEADER = "gwblowup-cache v1"

PathLike = Union[str, os.PathLike]


def dumps(store: MemoStore) -> str:
    """Cache file contents for store."""
    lines = [HEADER]
    for key, value in store.items():
        lines.append(CacheRecord.from_entry(key, value).model_dump_json())
    return "\n".join(lines) + "\n"


def save(store: MemoStore, destination: PathLike) -> int:
    """Write ``store`` to ``destination``; returns the number of records."""
    text = dumps(store)
    try:
        with open(destination, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as e:
        logger.error(f"Failed to save cache to {destination}: {e}")
        raise CacheWriteError(destination, e) from e
    count = len(store)
    logger.info(f"Saved {count} records to {destination}")
    return count


def loads(text: str) -> MemoStore:
    """Parse cache file contents into a store."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != HEADER:
        found = lines[0] if lines else ""
        raise CacheFormatError(f"unsupported cache version: {found!r}", line=1)
    store = MemoStore()
    for number, line in enumerate(lines[1:], start=2):
        try:
            record = CacheRecord.model_validate_json(line)
        except ValidationError as e:
            message = "; ".join(error["msg"] for error in e.errors())
            raise CacheFormatError(f"malformed record: {message}", line=number) from e
        key, value = record.to_entry()
        if key in store:
            raise CacheFormatError(f"duplicate record for {key.as_class()}", line=number)
        store.put(key, value)
    logger.debug(f"Parsed {len(store)} cache records")
    return store


def load(source: PathLike) -> MemoStore:
    """Read a file written by :func:`save`."""
    with open(source, "r", encoding="utf-8", newline="") as handle:
        text = handle.read()
    store = loads(text)
    logger.info(f"Loaded {len(store)} records from {source}")
    return store


@contextmanager
def open_store(path: PathLike) -> Iterator[MemoStore]:
    """Load the cache at ``path`` (empty if missing) and save it back on exit."""
    store = load(path) if Path(path).exists() else MemoStore()
    yield store
    save(store, path)
