import json

import pytest

from gwblowup import cache
from gwblowup.exceptions import CacheFormatError, CacheWriteError
from gwblowup.models.curve import CurveClass, Key
from gwblowup.services.engine import InvariantEngine
from gwblowup.services.lattice import table_classes
from gwblowup.store import MemoStore


def test_save_single_record(tmp_path):
    """Test a one-record store is written byte for byte."""
    path = tmp_path / "memo.cache"
    count = cache.save(MemoStore({Key(3, ()): 12}), path)
    assert count == 1
    assert path.read_bytes() == b'gwblowup-cache v1\n{"d":3,"alpha":[],"N":"12"}\n'


def test_save_empty_store(tmp_path):
    """Test an empty store is just the header."""
    path = tmp_path / "memo.cache"
    assert cache.save(MemoStore(), path) == 0
    assert path.read_text(encoding="utf-8") == "gwblowup-cache v1\n"


def test_records_are_sorted_by_key(tmp_path):
    """Test records are written in (d, alpha) order."""
    path = tmp_path / "memo.cache"
    cache.save(MemoStore({Key(7, (5,)): 21504, Key(4, (2, 2)): 12}), path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert [json.loads(line)["d"] for line in lines[1:]] == [4, 7]


def test_round_trip(tmp_path):
    """Test a saved store loads back unchanged."""
    engine = InvariantEngine()
    for c in table_classes(4):
        engine.invariant(c)
    path = tmp_path / "memo.cache"
    cache.save(engine.store, path)
    assert cache.load(path) == engine.store


def test_save_is_byte_stable(tmp_path):
    """Test insertion order does not change the file."""
    first = InvariantEngine()
    second = InvariantEngine()
    for c in table_classes(4):
        first.invariant(c)
    for c in reversed(table_classes(4)):
        second.invariant(c)
    cache.save(first.store, tmp_path / "a")
    cache.save(second.store, tmp_path / "b")
    assert (tmp_path / "a").read_bytes() == (tmp_path / "b").read_bytes()


def test_wrong_version_is_rejected(tmp_path):
    """Test an unknown header is a format error on line 1."""
    path = tmp_path / "memo.cache"
    path.write_text('gwblowup-cache v2\n{"d":3,"alpha":[],"N":"12"}\n', encoding="utf-8")
    with pytest.raises(CacheFormatError, match="unsupported cache version"):
        cache.load(path)


@pytest.mark.parametrize(
    "record",
    [
        '{"d":3,"alpha":[],"N":"-12"}',
        '{"d":3,"alpha":[],"N":12}',
        '{"d":3,"alpha":[2,3],"N":"1"}',
        '{"d":3,"alpha":[1],"N":"1"}',
        '{"d":1,"alpha":[],"N":"1"}',
        '{"d":1,"alpha":[3],"N":"0"}',
        '{"d":3,"alpha":[]}',
        "not json",
    ],
)
def test_malformed_record_cites_the_line(tmp_path, record):
    """Test a bad record reports its line number."""
    path = tmp_path / "memo.cache"
    path.write_text(f'gwblowup-cache v1\n{{"d":2,"alpha":[],"N":"1"}}\n{record}\n', encoding="utf-8")
    with pytest.raises(CacheFormatError, match="line 3"):
        cache.load(path)


def test_write_failure_names_the_destination(tmp_path):
    """Test an unwritable path raises CacheWriteError."""
    destination = tmp_path / "missing" / "memo.cache"
    with pytest.raises(CacheWriteError, match="missing"):
        cache.save(MemoStore(), destination)


def test_open_store_saves_on_exit(tmp_path):
    """Test open_store writes the store back when the block ends."""
    path = tmp_path / "memo.cache"
    with cache.open_store(path) as store:
        InvariantEngine(store).invariant(CurveClass(4, ()))
    assert Key(4, ()) in cache.load(path)


def test_warm_cache_gives_identical_values(tmp_path):
    """Test values read from a cache match a cold computation."""
    path = tmp_path / "memo.cache"
    cold = InvariantEngine()
    cold_values = [cold.invariant(c) for d in range(1, 6) for c in table_classes(d)]
    cache.save(cold.store, path)

    warm = InvariantEngine(cache.load(path))
    warm_values = [warm.invariant(c) for d in range(1, 6) for c in table_classes(d)]
    assert warm_values == cold_values
    assert len(warm.store) == len(cold.store)
