from pydantic import BaseModel


class ResidualRecord(BaseModel):
    """One associativity relation instance with a nonzero residual."""
    indices: tuple[int, int, int, int]
    d: int
    alpha: list[int]
    n: int
    residual: int


class VerificationReport(BaseModel):
    """Outcome of checking the associativity relations over a finite range."""
    r: int
    d_max: int
    n_max: int
    instances: int = 0
    nontrivial: int = 0
    failures: list[ResidualRecord] = []

    @property
    def ok(self) -> bool:
        return not self.failures
