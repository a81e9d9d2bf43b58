from typing import Optional
from pydantic import BaseModel


class InvariantRecord(BaseModel):
    """One output row; ``d``, ``alpha`` and ``N`` match the cache record."""
    d: int
    alpha: list[int]
    N: str
    status: Optional[str] = None
    reason: Optional[str] = None
