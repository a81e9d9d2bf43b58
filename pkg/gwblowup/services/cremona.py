"""Cremona transformation, orbit reduction and the enumerativity classifier.

The quadratic transformation centred at three of the blown-up points
changes basis on X_r; N_{d,alpha} is invariant under it. Reducing a class
along the greedy chain lowers d until no triple of entries exceeds d.
"""

import logging
from typing import Optional

from gwblowup.models.curve import CurveClass
from gwblowup.models.status import EnumReason, EnumStatus
from gwblowup.services.lattice import expected_dim

logger = logging.getLogger(__name__)


def cremona_transform(c: CurveClass, i: int, j: int, k: int) -> CurveClass:
    """Apply the transformation at positions i, j, k (0-based). Self-inverse."""
    if c.r < 3:
        raise ValueError(f"the Cremona transformation needs r >= 3, got r = {c.r}")
    if len({i, j, k}) != 3:
        raise ValueError(f"indices must be distinct, got {(i, j, k)}")
    for index in (i, j, k):
        if not 0 <= index < c.r:
            raise IndexError(f"index {index} out of range for r = {c.r}")
    a1, a2, a3 = c.alpha[i], c.alpha[j], c.alpha[k]
    d = c.d
    alpha = list(c.alpha)
    alpha[i] = d - a2 - a3
    alpha[j] = d - a1 - a3
    alpha[k] = d - a1 - a2
    return CurveClass(2 * d - a1 - a2 - a3, tuple(alpha))


def _chain_form(c: CurveClass) -> CurveClass:
    # descending, zeros dropped, ones kept
    return CurveClass(c.d, tuple(sorted((a for a in c.alpha if a != 0), reverse=True)))


def _check_effective(c: CurveClass) -> None:
    if c.d <= 0 or any(a < 0 for a in c.alpha):
        raise ValueError(f"Cremona reduction needs d > 0 and alpha >= 0, got {c}")


def cremona_step(c: CurveClass) -> Optional[CurveClass]:
    """One reducing step at the three largest entries, or None if there is none.

    None is returned when the three largest entries sum to at most d, or when
    the transformed class would leave d > 0, alpha >= 0.
    """
    _check_effective(c)
    current = _chain_form(c).padded(3)
    if sum(current.alpha[:3]) <= current.d:
        return None
    image = cremona_transform(current, 0, 1, 2)
    if image.d <= 0 or any(a < 0 for a in image.alpha):
        return None
    return _chain_form(image)


def cremona_chain(c: CurveClass) -> list[CurveClass]:
    """The input followed by every class the greedy reduction visits."""
    _check_effective(c)
    chain = [_chain_form(c)]
    while True:
        following = cremona_step(chain[-1])
        if following is None:
            break
        chain.append(following)
    logger.debug(f"Cremona chain of {c} has {len(chain)} classes")
    return chain


def cremona_reduce(c: CurveClass) -> CurveClass:
    """The end of the reduction chain, with 1-entries dropped."""
    last = cremona_chain(c)[-1]
    return CurveClass(last.d, tuple(a for a in last.alpha if a >= 2))


def _direct_reason(c: CurveClass) -> Optional[EnumReason]:
    if expected_dim(c) > 0:
        return EnumReason.POSITIVE_DIM
    if any(a in (1, 2) for a in c.alpha):
        return EnumReason.SMALL_MULTIPLICITY
    if sum(1 for a in c.alpha if a != 0) <= 8:
        return EnumReason.AT_MOST_EIGHT
    return None


def enumerativity(c: CurveClass) -> EnumStatus:
    """Whether N_{d,alpha} is known to count actual curves, and by which rule."""
    if c.d <= 0 or any(a < 0 for a in c.alpha) or expected_dim(c) < 0:
        raise ValueError(f"enumerativity needs d > 0, alpha >= 0 and n >= 0, got {c}")
    reason = _direct_reason(_chain_form(c))
    if reason is not None:
        return EnumStatus.enumerative(reason)
    for representative in cremona_chain(c)[1:]:
        if _direct_reason(representative) is not None:
            return EnumStatus.enumerative(EnumReason.CREMONA_ORBIT)
    return EnumStatus.unknown()
