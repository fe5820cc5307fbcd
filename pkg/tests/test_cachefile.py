from __future__ import annotations

import json
from fractions import Fraction

import pytest

from severi import InvariantEngine, InvariantKind
from severi.cachefile import (
    CacheError,
    SCHEMA_VERSION,
    load_cache,
    save_cache,
    seed_engine,
)


@pytest.fixture
def saved_cache(tmp_path):
    engine = InvariantEngine()
    engine.fill(6)
    path = tmp_path / "cache.json"
    save_cache(engine, path)
    return path


def test_round_trip_reproduces_every_entry(saved_cache):
    entries = load_cache(saved_cache)
    assert entries[InvariantKind.N0][5] == 87304
    assert entries[InvariantKind.G1][3] == Fraction(5, 4)
    engine = InvariantEngine()
    seed_engine(engine, entries)
    assert engine.snapshot() == entries


def test_save_load_save_is_stable(saved_cache, tmp_path):
    entries = load_cache(saved_cache)
    engine = InvariantEngine()
    seed_engine(engine, entries)
    second = tmp_path / "second.json"
    save_cache(engine, second)
    assert second.read_bytes() == saved_cache.read_bytes()


def test_schema_version_is_written(saved_cache):
    assert json.loads(saved_cache.read_text())["schema_version"] == SCHEMA_VERSION


def test_missing_file_is_cold_start(tmp_path):
    assert load_cache(tmp_path / "absent.json") == {}


def test_single_altered_digit_is_refused(saved_cache):
    doc = json.loads(saved_cache.read_text())
    doc["values"]["K1"] = [
        [d, "841" if d == 4 else value] for d, value in doc["values"]["K1"]
    ]
    saved_cache.write_text(json.dumps(doc))
    with pytest.raises(CacheError, match="poisoned"):
        load_cache(saved_cache)


@pytest.mark.parametrize(
    "values,message",
    [
        ({"BOGUS": [[1, "1"]]}, "unknown invariant"),
        ({"N0": [[0, "1"]]}, "bad degree"),
        ({"N0": [[1, "1"], [1, "1"]]}, "duplicate degree"),
        ({"N0": [[1, "one"]]}, "unparsable value"),
        ({"N0": [[1]]}, "malformed entry"),
        ({"N0": {"1": "1"}}, "must be an array"),
    ],
)
def test_malformed_documents_are_refused(tmp_path, values, message):
    path = tmp_path / "cache.json"
    path.write_text(json.dumps({"schema_version": SCHEMA_VERSION, "values": values}))
    with pytest.raises(CacheError, match=message):
        load_cache(path)


def test_seed_conflict_is_a_cache_error():
    engine = InvariantEngine()
    engine.n0(3)
    with pytest.raises(CacheError, match="conflicts"):
        seed_engine(engine, {InvariantKind.N0: {3: Fraction(13)}})
