from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True, slots=True)
class CurveClass:
    """The homology class dH - sum(a_i E_i) on the plane blown up at r points.

    ``alpha`` is order-sensitive here; permutation symmetry only enters
    through canonicalization.
    """

    d: int
    alpha: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.alpha, tuple):
            object.__setattr__(self, "alpha", tuple(self.alpha))

    @classmethod
    def point(cls, i: int, r: int) -> "CurveClass":
        """The degree-0 class -[i]_r, i.e. the exceptional curve E_i (0-based i)."""
        return cls(0, tuple(-1 if k == i else 0 for k in range(r)))

    @property
    def r(self) -> int:
        return len(self.alpha)

    @property
    def size(self) -> int:
        """|alpha|"""
        return sum(self.alpha)

    @property
    def expected_dim(self) -> int:
        return 3 * self.d - sum(self.alpha) - 1

    @property
    def is_zero(self) -> bool:
        return self.d == 0 and not any(self.alpha)

    def padded(self, length: int) -> "CurveClass":
        if len(self.alpha) >= length:
            return self
        return CurveClass(self.d, self.alpha + (0,) * (length - len(self.alpha)))

    def sorted_desc(self) -> "CurveClass":
        return CurveClass(self.d, tuple(sorted(self.alpha, reverse=True)))

    def __add__(self, other: "CurveClass") -> "CurveClass":
        if len(self.alpha) != len(other.alpha):
            raise ValueError(f"cannot add classes on X_{self.r} and X_{other.r}")
        return CurveClass(
            self.d + other.d, tuple(a + b for a, b in zip(self.alpha, other.alpha))
        )

    def __sub__(self, other: "CurveClass") -> "CurveClass":
        if len(self.alpha) != len(other.alpha):
            raise ValueError(f"cannot subtract classes on X_{self.r} and X_{other.r}")
        return CurveClass(
            self.d - other.d, tuple(a - b for a, b in zip(self.alpha, other.alpha))
        )

    def __str__(self) -> str:
        return f"({self.d}, ({', '.join(map(str, self.alpha))}))"


class KnownValue(NamedTuple):
    """Canonicalization settled the invariant without recursion."""

    value: int


class Key(NamedTuple):
    """Canonical memo key: d > 0 and a descending multiset of entries >= 2."""

    d: int
    multiset: tuple[int, ...]

    def as_class(self) -> CurveClass:
        return CurveClass(self.d, self.multiset)


CanonResult = KnownValue | Key


@dataclass(frozen=True, slots=True)
class SplitPair:
    """One term ((d1, beta), (d2, gamma)) of the splitting set of a class."""

    left: CurveClass
    right: CurveClass


@dataclass(frozen=True, slots=True)
class WeightedSplit:
    """A representative split standing for ``weight`` literal splits.

    When the enumeration pinned a position, that entry is first in both
    ``left.alpha`` and ``right.alpha``.
    """

    left: CurveClass
    right: CurveClass
    weight: int
