"""Curve-class combinatorics on the blown-up plane.

Dimension and genus formulas, binomials with the zero convention,
canonicalization by the symmetry and reduction rules, and enumeration of
the splitting set of a class: pairs ((d1, beta), (d2, gamma)) with

    (i)   both parts nonzero,
    (ii)  (d1, beta) + (d2, gamma) = (d, alpha),
    (iii) n_{d1,beta}, n_{d2,gamma} >= 0, d1, d2 >= 0, beta <= d1, gamma <= d2.
"""

import functools
import math
from collections import Counter
from itertools import product
from typing import Iterator, Optional

from gwblowup.models.curve import (
    CanonResult,
    CurveClass,
    Key,
    KnownValue,
    SplitPair,
    WeightedSplit,
)

# Raw split term: (d1, beta, d2, gamma, weight)
RawSplit = tuple[int, tuple[int, ...], int, tuple[int, ...], int]


def expected_dim(c: CurveClass) -> int:
    """n = 3d - |alpha| - 1, the number of point conditions."""
    return 3 * c.d - sum(c.alpha) - 1


def arithmetic_genus(c: CurveClass) -> int:
    """(d-1)(d-2)/2 - sum a_i(a_i-1)/2."""
    # both products are of consecutive integers, hence even
    return (c.d - 1) * (c.d - 2) // 2 - sum(a * (a - 1) // 2 for a in c.alpha)


def binomial(p: int, q: int) -> int:
    """Binomial coefficient, zero if q < 0 or p < q (also for negative p)."""
    if q < 0 or p < q:
        return 0
    return math.comb(p, q)


def canonicalize_raw(d: int, alpha: tuple[int, ...]) -> CanonResult:
    """canonicalize() on a bare (d, alpha) pair; the engine's hot path."""
    if d < 0:
        return KnownValue(0)
    if d == 0:
        nonzero = [a for a in alpha if a != 0]
        return KnownValue(1 if nonzero == [-1] else 0)
    multiset = []
    for a in alpha:
        if a < 0:
            return KnownValue(0)
        if a >= 2:
            multiset.append(a)
    if d == 1 and not multiset:
        return KnownValue(1)
    multiset.sort(reverse=True)
    return Key(d, tuple(multiset))


def canonicalize(c: CurveClass) -> CanonResult:
    """Normalize a class with n >= 0 by the symmetry and reduction rules.

    Dropping a 1-entry is valid at n = 0 as well: the reduced class has
    n + 1 > 0, where adding a 1-entry leaves N unchanged.
    """
    return canonicalize_raw(c.d, c.alpha)


def canonical_keys(d: int, max_length: Optional[int] = None) -> Iterator[Key]:
    """All canonical keys of degree d, in lexicographic order of the multiset."""
    if d <= 0:
        return
    budget = 3 * d - 1

    def _extend(prefix: tuple[int, ...], remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        if max_length is not None and len(prefix) >= max_length:
            return
        for a in range(2, min(cap, remaining) + 1):
            yield from _extend(prefix + (a,), remaining - a, a)

    for multiset in _extend((), budget, budget):
        if d == 1 and not multiset:
            continue
        yield Key(d, multiset)


def satisfies_split_conditions(left: CurveClass, right: CurveClass) -> bool:
    """Conditions (i) and (iii) of the splitting set, read literally."""
    if left.is_zero or right.is_zero:
        return False
    if left.d < 0 or right.d < 0:
        return False
    if expected_dim(left) < 0 or expected_dim(right) < 0:
        return False
    if any(b > left.d for b in left.alpha) or any(c > right.d for c in right.alpha):
        return False
    return True


def literal_split_terms(
    d: int, alpha: tuple[int, ...], positive_degrees_only: bool, prune: bool
) -> Iterator[RawSplit]:
    """Splits of (d, alpha) as raw tuples with weight 1."""
    r = len(alpha)
    total = sum(alpha)
    low = 1 if positive_degrees_only else 0
    for d1 in range(low, d - low + 1):
        d2 = d - d1
        if prune and (d1 == 0 or d2 == 0):
            # a degree-0 part only contributes as -[i]
            points = [CurveClass.point(i, r) for i in range(r)]
            if d1 == 0:
                betas = sorted(point.alpha for point in points)
            else:
                whole = CurveClass(d, alpha)
                betas = sorted((whole - point).alpha for point in points)
        elif prune:
            # negative entries in a positive-degree part contribute 0
            ranges = [range(max(0, a - d2), min(a, d1) + 1) for a in alpha]
            betas = product(*ranges)
        else:
            ranges = [range(a - d2, d1 + 1) for a in alpha]
            betas = product(*ranges)
        for beta in betas:
            gamma = tuple(a - b for a, b in zip(alpha, beta))
            size = sum(beta)
            if d1 == 0 and not any(beta):
                continue
            if d2 == 0 and not any(gamma):
                continue
            if 3 * d1 - size - 1 < 0 or 3 * d2 - (total - size) - 1 < 0:
                continue
            if any(b > d1 for b in beta) or any(c > d2 for c in gamma):
                continue
            yield d1, beta, d2, gamma, 1


def splits(
    c: CurveClass, positive_degrees_only: bool = False, prune: bool = True
) -> list[SplitPair]:
    """The splitting set of c, in lexicographic order of (d1, beta).

    With ``prune`` (the default) ranges known to contribute zero
    are skipped; ``prune=False`` enumerates the definition literally and
    exists as a cross-check.
    """
    return [
        SplitPair(CurveClass(d1, beta), CurveClass(d2, gamma))
        for d1, beta, d2, gamma, _ in literal_split_terms(
            c.d, c.alpha, positive_degrees_only, prune
        )
    ]


@functools.lru_cache(maxsize=None)
def compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    """Ordered tuples of ``parts`` non-negative integers summing to ``total``."""
    if parts == 1:
        return ((total,),)
    return tuple(
        (value,) + rest
        for value in range(total + 1)
        for rest in compositions(total - value, parts - 1)
    )


def multinomial(counts: tuple[int, ...]) -> int:
    """Multinomial coefficient (sum counts)! / prod(count!)."""
    result = 1
    running = 0
    for k in counts:
        running += k
        result *= math.comb(running, k)
    return result


@functools.lru_cache(maxsize=None)
def _group_options(
    a: int, count: int, lo: int, hi: int
) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int, int], ...]:
    """Ways to split ``count`` equal entries ``a`` with b in [lo, hi].

    Each option is (beta part, gamma part, |beta part|, weight).
    """
    values = range(lo, hi + 1)
    options = []
    for counts in compositions(count, len(values)):
        beta = tuple(b for b, k in zip(values, counts) for _ in range(k))
        gamma = tuple(a - b for b in beta)
        options.append((beta, gamma, sum(beta), multinomial(counts)))
    return tuple(options)


def orbit_split_terms(
    d: int, alpha: tuple[int, ...], pinned: Optional[int] = None
) -> Iterator[RawSplit]:
    """Positive-degree splits up to permutations of equal entries, negative entries pruned."""
    total = sum(alpha)
    rest = list(alpha)
    pinned_value = None
    if pinned is not None:
        pinned_value = rest.pop(pinned)
    groups = sorted(Counter(rest).items(), reverse=True)
    for d1 in range(1, d):
        d2 = d - d1
        choices = []
        if pinned_value is not None:
            a = pinned_value
            choices.append(
                [((b,), (a - b,), b, 1) for b in range(max(0, a - d2), min(a, d1) + 1)]
            )
        for a, count in groups:
            lo, hi = max(0, a - d2), min(a, d1)
            if lo > hi:
                choices = None
                break
            choices.append(_group_options(a, count, lo, hi))
        if choices is None or any(not options for options in choices):
            continue
        for combo in product(*choices):
            size = 0
            weight = 1
            beta: tuple[int, ...] = ()
            gamma: tuple[int, ...] = ()
            for part_beta, part_gamma, part_size, part_weight in combo:
                beta += part_beta
                gamma += part_gamma
                size += part_size
                weight *= part_weight
            if 3 * d1 - size - 1 < 0 or 3 * d2 - (total - size) - 1 < 0:
                continue
            yield d1, beta, d2, gamma, weight


def weighted_splits(c: CurveClass, pinned: Optional[int] = None) -> list[WeightedSplit]:
    """Positive-degree splits of c, one representative per orbit of equal entries."""
    return [
        WeightedSplit(CurveClass(d1, beta), CurveClass(d2, gamma), weight)
        for d1, beta, d2, gamma, weight in orbit_split_terms(c.d, c.alpha, pinned)
    ]


def table_classes(d: int) -> list[CurveClass]:
    """Classes listed for degree d: alpha descending with entries in [2, d],
    omitting negative genus and pairs of entries summing to more than d."""
    rows = []
    if d == 1:
        rows.append(CurveClass(1, ()))
    for key in canonical_keys(d):
        c = key.as_class()
        if any(a > d for a in c.alpha) or arithmetic_genus(c) < 0:
            continue
        if len(c.alpha) >= 2 and c.alpha[0] + c.alpha[1] > d:
            continue
        rows.append(c)
    return rows
