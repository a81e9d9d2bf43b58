from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from gwblowup.models.curve import Key


class CacheRecord(BaseModel):
    """One memo entry as stored on disk: {"d": 3, "alpha": [], "N": "12"}."""

    model_config = ConfigDict(extra="forbid", strict=True)

    d: int
    alpha: list[int]
    N: str

    @field_validator("N")
    @classmethod
    def validate_count(cls, value: str) -> str:
        if not value.isascii() or not value.isdigit():
            raise ValueError(f"N must be a non-negative decimal integer, got {value!r}")
        return value

    @model_validator(mode="after")
    def validate_key(self) -> "CacheRecord":
        if self.d <= 0:
            raise ValueError(f"d must be positive, got {self.d}")
        if any(a < 2 for a in self.alpha):
            raise ValueError("alpha entries must be >= 2")
        if self.alpha != sorted(self.alpha, reverse=True):
            raise ValueError("alpha must be in descending order")
        if self.d == 1 and not self.alpha:
            raise ValueError("(1, []) is an initial value, not a memo entry")
        if 3 * self.d - sum(self.alpha) - 1 < 0:
            raise ValueError("expected dimension is negative")
        return self

    @classmethod
    def from_entry(cls, key: Key, value: int) -> "CacheRecord":
        return cls(d=key.d, alpha=list(key.multiset), N=str(value))

    def to_entry(self) -> tuple[Key, int]:
        return Key(self.d, tuple(self.alpha)), int(self.N)
