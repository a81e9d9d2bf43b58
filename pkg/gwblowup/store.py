import threading
from typing import Iterator, Optional

from gwblowup.exceptions import RecursionConsistencyError
from gwblowup.models.curve import Key


class MemoStore:
    """Canonical key -> invariant.

    Reads need no coordination; writes take a lock and are idempotent, so
    several threads may compute the same key and store the same value.
    """

    def __init__(self, values: Optional[dict[Key, int]] = None):
        self._values: dict[Key, int] = dict(values or {})
        self._lock = threading.Lock()

    def get(self, key: Key) -> Optional[int]:
        return self._values.get(key)

    def put(self, key: Key, value: int) -> None:
        with self._lock:
            existing = self._values.get(key)
            if existing is not None and existing != value:
                raise RecursionConsistencyError(
                    key.as_class(), f"memo already holds {existing}, got {value}"
                )
            self._values[key] = value

    def __contains__(self, key: object) -> bool:
        return key in self._values

    def __getitem__(self, key: Key) -> int:
        return self._values[key]

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[Key]:
        with self._lock:
            return iter(sorted(self._values))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MemoStore):
            return NotImplemented
        return self._values == other._values

    def items(self) -> list[tuple[Key, int]]:
        """Entries sorted by (d, multiset)."""
        with self._lock:
            return sorted(self._values.items())

    def __repr__(self) -> str:
        return f"MemoStore({len(self._values)} keys)"
