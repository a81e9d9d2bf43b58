"""Memoized evaluation of N_{d,alpha} by the relations R(m) and R(i).

Classes with n >= 3 are evaluated by R(m), which only needs invariants of
lower degree. Classes with 0 <= n < 3 are solved from R(i) at a pivot
entry, which needs N_{d,alpha-[i]} (one more point condition) and lower
degrees; after at most three such steps R(m) applies.

Evaluation keeps an explicit stack of pending keys instead of recursing,
so long chains of dependencies never hit the interpreter's recursion limit.
"""

import functools
import logging
from enum import Enum
from typing import Callable, Iterator, Optional

from pydantic import BaseModel, ConfigDict

from gwblowup.config import Settings
from gwblowup.exceptions import RecursionConsistencyError, UndefinedInvariantError
from gwblowup.models.curve import CanonResult, CurveClass, Key, KnownValue
from gwblowup.services.lattice import (
    RawSplit,
    arithmetic_genus,
    binomial,
    canonicalize_raw,
    expected_dim,
    literal_split_terms,
    orbit_split_terms,
)
from gwblowup.store import MemoStore

logger = logging.getLogger(__name__)

# (d, alpha) -> invariant, or None when the value is not available yet
Lookup = Callable[[int, tuple[int, ...]], Optional[int]]


class PivotRule(str, Enum):
    LARGEST_ENTRY = "largest"
    FIRST_ENTRY = "first"
    SMALLEST_ENTRY = "smallest"


class EngineConfig(BaseModel):
    """How the engine evaluates; never what it computes."""

    model_config = ConfigDict(frozen=True)

    use_vanishing_shortcuts: bool = False
    pivot_rule: PivotRule = PivotRule.LARGEST_ENTRY
    orbit_splits: bool = True

    @classmethod
    def from_settings(cls, settings: Settings) -> "EngineConfig":
        return cls(
            use_vanishing_shortcuts=settings.USE_VANISHING_SHORTCUTS,
            pivot_rule=PivotRule(settings.PIVOT_RULE),
            orbit_splits=settings.ORBIT_SPLITS,
        )


def vanishing_shortcut(c: CurveClass) -> Optional[int]:
    """0 when the class is known to carry no curves, None when undecided.

    Expects d > 0, alpha >= 0 and n >= 0.
    """
    if arithmetic_genus(c) < 0:
        return 0
    if any(a > c.d for a in c.alpha):
        return 0
    if len(c.alpha) >= 2:
        first, second = sorted(c.alpha, reverse=True)[:2]
        if first + second > c.d:
            line_through_two = c.d == 1 and sorted(a for a in c.alpha if a) == [1, 1]
            if not line_through_two:
                return 0
    return None


@functools.lru_cache(maxsize=None)
def _key_vanishes(key: Key) -> bool:
    return vanishing_shortcut(key.as_class()) is not None


def select_pivot(alpha: tuple[int, ...], rule: PivotRule) -> int:
    """Index of the entry R(i) is solved at; only entries >= 1 qualify."""
    candidates = [i for i, a in enumerate(alpha) if a >= 1]
    if not candidates:
        raise ValueError(f"no positive entry to pivot on in {alpha}")
    if rule is PivotRule.FIRST_ENTRY:
        return candidates[0]
    if rule is PivotRule.SMALLEST_ENTRY:
        return min(candidates, key=lambda i: (alpha[i], i))
    return max(candidates, key=lambda i: (alpha[i], -i))


class InvariantEngine:
    """Evaluates Gromov-Witten invariants against a shared memo store."""

    def __init__(
        self, store: Optional[MemoStore] = None, config: Optional[EngineConfig] = None
    ):
        self.store = store if store is not None else MemoStore()
        self.config = config or EngineConfig()

    def _resolve(self, d: int, alpha: tuple[int, ...]) -> CanonResult:
        """Canonicalize, then apply the vanishing shortcuts if enabled."""
        resolved = canonicalize_raw(d, alpha)
        if self.config.use_vanishing_shortcuts and isinstance(resolved, Key):
            if _key_vanishes(resolved):
                return KnownValue(0)
        return resolved

    def invariant(self, c: CurveClass) -> int:
        """N_{d,alpha}; only defined for n_{d,alpha} >= 0."""
        if expected_dim(c) < 0:
            raise UndefinedInvariantError(c)
        return self._value(c.d, c.alpha)

    def relation_m_rhs(self, c: CurveClass) -> int:
        """Right side of R(m) for c, summed over c's own (uncanonicalized) splits."""
        assert expected_dim(c) >= 3, f"R(m) needs n >= 3, got {expected_dim(c)} for {c}"
        return self._sum_m(c.d, c.alpha, self._value)

    def relation_i_solve(self, c: CurveClass, pivot: int) -> int:
        """N_{d,alpha} solved from R(i) at position ``pivot`` (0-based)."""
        if c.d <= 0 or expected_dim(c) < 0:
            raise ValueError(f"R(i) needs d > 0 and n >= 0, got {c}")
        if c.alpha[pivot] < 1:
            raise ValueError(f"R(i) needs a positive pivot entry, got {c.alpha[pivot]}")
        return self._solve_i(c.d, c.alpha, pivot, self._value)

    def evaluate_uncanonicalized(self, c: CurveClass) -> int:
        """Apply one relation to c exactly as given; inner values use the memo."""
        n = expected_dim(c)
        if n < 0:
            raise UndefinedInvariantError(c)
        if c.d <= 0 or any(a < 0 for a in c.alpha):
            return self.invariant(c)
        if n >= 3:
            return self.relation_m_rhs(c)
        if not any(c.alpha):
            # n < 3 with alpha = 0 forces d = 1
            return 1
        return self.relation_i_solve(c, select_pivot(c.alpha, self.config.pivot_rule))

    def _value(self, d: int, alpha: tuple[int, ...]) -> int:
        resolved = self._resolve(d, alpha)
        if isinstance(resolved, KnownValue):
            return resolved.value
        value = self.store.get(resolved)
        if value is None:
            value = self._evaluate(resolved)
        return value

    def _evaluate(self, root: Key) -> int:
        pending = [root]
        while pending:
            key = pending[-1]
            if key in self.store:
                pending.pop()
                continue
            missing: set[Key] = set()
            value = self._apply_relation(key, self._collecting_lookup(missing))
            if missing:
                pending.extend(sorted(missing))
                continue
            if value < 0:
                logger.error(f"Negative invariant {value} computed for {key.as_class()}")
                raise RecursionConsistencyError(key.as_class(), f"negative value {value}")
            self.store.put(key, value)
            pending.pop()
        return self.store[root]

    def _collecting_lookup(self, missing: set[Key]) -> Lookup:
        def lookup(d: int, alpha: tuple[int, ...]) -> Optional[int]:
            resolved = self._resolve(d, alpha)
            if isinstance(resolved, KnownValue):
                return resolved.value
            value = self.store.get(resolved)
            if value is None:
                missing.add(resolved)
            return value

        return lookup

    def _apply_relation(self, key: Key, lookup: Lookup) -> Optional[int]:
        d, alpha = key
        n = 3 * d - sum(alpha) - 1
        if n >= 3:
            value = self._sum_m(d, alpha, lookup)
            if value is not None:
                logger.debug(f"N{key.as_class()} = {value} by R(m)")
            return value
        pivot = select_pivot(alpha, self.config.pivot_rule)
        value = self._solve_i(d, alpha, pivot, lookup)
        if value is not None:
            logger.debug(f"N{key.as_class()} = {value} by R(i) at entry {pivot}")
        return value

    def _split_terms(
        self, d: int, alpha: tuple[int, ...], pinned: Optional[int] = None
    ) -> tuple[Iterator[RawSplit], Optional[int]]:
        """Positive-degree splits and the position of the pinned entry in them."""
        if self.config.orbit_splits:
            return orbit_split_terms(d, alpha, pinned), (0 if pinned is not None else None)
        return literal_split_terms(d, alpha, True, True), pinned

    def _sum_m(self, d: int, alpha: tuple[int, ...], lookup: Lookup) -> Optional[int]:
        n = 3 * d - sum(alpha) - 1
        total = 0
        complete = True
        terms, _ = self._split_terms(d, alpha)
        for d1, beta, d2, gamma, weight in terms:
            n1 = 3 * d1 - sum(beta) - 1
            coefficient = d1 * d2 * binomial(n - 3, n1 - 1) - d1 * d1 * binomial(n - 3, n1)
            if coefficient == 0:
                continue
            pairing = d1 * d2 - sum(b * c for b, c in zip(beta, gamma))
            if pairing == 0:
                continue
            left = lookup(d1, beta)
            if left is None:
                complete = False
                continue
            if left == 0:
                continue
            right = lookup(d2, gamma)
            if right is None:
                complete = False
                continue
            total += weight * left * right * pairing * coefficient
        return total if complete else None

    def _solve_i(
        self, d: int, alpha: tuple[int, ...], pivot: int, lookup: Lookup
    ) -> Optional[int]:
        a = alpha[pivot]
        n = 3 * d - sum(alpha) - 1
        reduced = alpha[:pivot] + (a - 1,) + alpha[pivot + 1 :]
        base = lookup(d, reduced)
        complete = base is not None
        numerator = (d * d - (a - 1) ** 2) * (base or 0)
        terms, at = self._split_terms(d, reduced, pivot)
        for d1, beta, d2, gamma, weight in terms:
            b_i, c_i = beta[at], gamma[at]
            factor = d1 * d2 * b_i * c_i - d1 * d1 * c_i * c_i
            if factor == 0:
                continue
            n1 = 3 * d1 - sum(beta) - 1
            coefficient = binomial(n, n1)
            if coefficient == 0:
                continue
            pairing = d1 * d2 - sum(b * c for b, c in zip(beta, gamma))
            if pairing == 0:
                continue
            left = lookup(d1, beta)
            if left is None:
                complete = False
                continue
            if left == 0:
                continue
            right = lookup(d2, gamma)
            if right is None:
                complete = False
                continue
            numerator += weight * left * right * pairing * factor * coefficient
        if not complete:
            return None
        divisor = d * d * a
        value, remainder = divmod(numerator, divisor)
        if remainder:
            cls = CurveClass(d, alpha)
            logger.error(f"R(i) at {cls}: {numerator} is not divisible by {divisor}")
            raise RecursionConsistencyError(cls, f"{numerator} is not divisible by {divisor}")
        return value
