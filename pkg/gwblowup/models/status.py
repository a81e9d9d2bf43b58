from dataclasses import dataclass
from enum import Enum
from typing import Optional


class EnumReason(str, Enum):
    """Which rule certified an invariant as enumerative, in checking order."""

    POSITIVE_DIM = "positive-dim"
    SMALL_MULTIPLICITY = "small-multiplicity"
    AT_MOST_EIGHT = "at-most-eight"
    CREMONA_ORBIT = "cremona-orbit"


@dataclass(frozen=True, slots=True)
class EnumStatus:
    """Enumerative(reason), or Unknown when ``reason`` is None."""

    reason: Optional[EnumReason] = None

    @classmethod
    def enumerative(cls, reason: EnumReason) -> "EnumStatus":
        return cls(reason)

    @classmethod
    def unknown(cls) -> "EnumStatus":
        return cls(None)

    @property
    def is_enumerative(self) -> bool:
        return self.reason is not None

    @property
    def label(self) -> str:
        return "enumerative" if self.is_enumerative else "unknown"

    def __str__(self) -> str:
        if self.reason is None:
            return self.label
        return f"{self.label} ({self.reason.value})"
