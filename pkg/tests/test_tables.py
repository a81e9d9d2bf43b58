"""Published values for degrees up to 7."""

import pytest

from gwblowup.models.curve import CurveClass
from gwblowup.services.cremona import cremona_reduce
from gwblowup.services.engine import InvariantEngine
from gwblowup.services.lattice import table_classes

LOW_DEGREES = {
    (1, ()): 1,
    (2, ()): 1,
    (3, ()): 12,
    (3, (2,)): 1,
    (4, ()): 620,
    (4, (2,)): 96,
    (4, (2, 2)): 12,
    (4, (2, 2, 2)): 1,
    (4, (3,)): 1,
    (5, ()): 87304,
    (5, (2,)): 18132,
    (5, (2, 2)): 3510,
    (5, (2, 2, 2)): 620,
    (5, (2, 2, 2, 2)): 96,
    (5, (2, 2, 2, 2, 2)): 12,
    (5, (2, 2, 2, 2, 2, 2)): 1,
    (5, (3,)): 640,
    (5, (3, 2)): 96,
    (5, (3, 2, 2)): 12,
    (5, (3, 2, 2, 2)): 1,
    (5, (4,)): 1,
}

DEGREE_SIX_AND_SEVEN = {
    (6, ()): 26312976,
    (6, (2,)): 6506400,
    (6, (2,) * 2): 1558272,
    (6, (2,) * 3): 359640,
    (6, (2,) * 4): 79416,
    (6, (2,) * 5): 16608,
    (6, (2,) * 6): 3240,
    (6, (2,) * 7): 576,
    (6, (2,) * 8): 90,
    (6, (3,)): 401172,
    (6, (3, 2)): 87544,
    (6, (4,)): 3840,
    (7, ()): 14616808192,
    (7, (2,)): 4059366000,
    (7, (2,) * 2): 1108152240,
    (7, (2,) * 3): 296849546,
    (7, (2,) * 4): 77866800,
    (7, (2,) * 5): 19948176,
    (7, (2,) * 6): 4974460,
    (7, (2,) * 7): 1202355,
    (7, (2,) * 8): 280128,
    (7, (2,) * 9): 62450,
    (7, (2,) * 10): 13188,
    (7, (3,)): 347987200,
    (7, (3, 2)): 90777600,
    (7, (3,) + (2,) * 2): 23133696,
    (7, (3,) + (2,) * 3): 5739856,
    (7, (3,) + (2,) * 4): 1380648,
    (7, (3,) + (2,) * 5): 320160,
    (7, (3,) + (2,) * 6): 71040,
    (7, (3,) + (2,) * 7): 14928,
    (7, (3,) + (2,) * 8): 2928,
    (7, (3, 3)): 6508640,
    (7, (4,)): 7492040,
    (7, (4, 2)): 1763415,
    (7, (5,)): 21504,
}


def _rows(engine: InvariantEngine, d: int) -> dict:
    return {(c.d, c.alpha): engine.invariant(c) for c in table_classes(d)}


def test_low_degree_table(engine: InvariantEngine):
    """Test every row up to degree 5."""
    computed = {}
    for d in range(1, 6):
        computed.update(_rows(engine, d))
    assert computed == LOW_DEGREES


@pytest.mark.slow
def test_degree_six_and_seven_table(fast_engine: InvariantEngine):
    """Test published rows of degrees 6 and 7."""
    computed = {}
    for d in (6, 7):
        computed.update(_rows(fast_engine, d))
    for key, value in DEGREE_SIX_AND_SEVEN.items():
        assert computed[key] == value, key


@pytest.mark.slow
def test_unpublished_rows_agree_with_their_cremona_reduction(
    fast_engine: InvariantEngine,
):
    """Test rows missing from the published tables against their reductions."""
    for d in (6, 7):
        for c in table_classes(d):
            if (c.d, c.alpha) in DEGREE_SIX_AND_SEVEN:
                continue
            reduced = cremona_reduce(c)
            assert fast_engine.invariant(c) == fast_engine.invariant(reduced)
