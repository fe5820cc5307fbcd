"""Persistence of memoized invariant values.

The cache file is a single JSON document: a ``schema_version`` field
plus per-invariant arrays of ``[degree, exact-value-string]`` pairs.
Loading validates the schema and then recomputes every entry with a
fresh engine before any value is trusted: a cache that conflicts with
recomputation anywhere is refused outright.  (Recomputation is cheap at
the degree ranges where a cache file is plausible, and anything weaker
-- e.g. spot checks -- would let a single altered digit through.)
Absent or empty files load as a cold start.
"""

from __future__ import annotations

import json
from pathlib import Path

from .exact import ExactScalar, format_exact
from .engine import InvariantEngine, InvariantKind, MemoConflictError

SCHEMA_VERSION = 1


class CacheError(Exception):
    """The cache file is unreadable, malformed, or poisoned."""


def save_cache(engine: InvariantEngine, path: str | Path) -> None:
    """Persist all memoized values as exact strings, sorted by degree."""
    snapshot = engine.snapshot()
    payload = {
        "schema_version": SCHEMA_VERSION,
        "values": {
            kind.value: [
                [d, format_exact(value)] for d, value in sorted(table.items())
            ]
            for kind, table in snapshot.items()
            if table
        },
    }
    Path(path).write_text(
        json.dumps(payload, indent=2) + "\n", encoding="utf-8", newline="\n"
    )


def _parse_cache(path: Path) -> dict[InvariantKind, dict[int, ExactScalar]]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CacheError(f"cannot read cache {path}: {exc}")
    if not text.strip():
        return {}
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CacheError(f"cache {path} is not valid JSON: {exc}")
    if not isinstance(payload, dict):
        raise CacheError(f"cache {path}: top-level document must be an object")
    version = payload.get("schema_version")
    if version != SCHEMA_VERSION:
        raise CacheError(
            f"cache {path}: schema_version {version!r} is not supported "
            f"(expected {SCHEMA_VERSION})"
        )
    raw_values = payload.get("values", {})
    if not isinstance(raw_values, dict):
        raise CacheError(f"cache {path}: 'values' must be an object")
    entries: dict[InvariantKind, dict[int, ExactScalar]] = {}
    for name, pairs in raw_values.items():
        try:
            kind = InvariantKind(name)
        except ValueError:
            raise CacheError(f"cache {path}: unknown invariant {name!r}")
        if not isinstance(pairs, list):
            raise CacheError(f"cache {path}: entries for {name} must be an array")
        table: dict[int, ExactScalar] = {}
        for pair in pairs:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise CacheError(
                    f"cache {path}: malformed entry {pair!r} under {name}"
                )
            d, value_text = pair
            if not isinstance(d, int) or isinstance(d, bool) or d < 1:
                raise CacheError(
                    f"cache {path}: bad degree {d!r} under {name}"
                )
            if d in table:
                raise CacheError(
                    f"cache {path}: duplicate degree {d} under {name}"
                )
            try:
                table[d] = ExactScalar(str(value_text))
            except (ValueError, ZeroDivisionError, TypeError):
                raise CacheError(
                    f"cache {path}: unparsable value {value_text!r} "
                    f"for {name} at d={d}"
                )
        entries[kind] = table
    return entries


def _verify(
    entries: dict[InvariantKind, dict[int, ExactScalar]], path: Path
) -> None:
    # A fresh engine recomputes everything cold, so loaded values can
    # never contaminate their own verification.
    probe = InvariantEngine()
    for kind in InvariantKind:
        for d, cached in sorted(entries.get(kind, {}).items()):
            recomputed = probe.value(kind, d)
            if recomputed != cached:
                raise CacheError(
                    f"cache {path} is poisoned: {kind.value} at d={d} is "
                    f"{format_exact(cached)}, recomputation gives "
                    f"{format_exact(recomputed)}"
                )


def load_cache(path: str | Path) -> dict[InvariantKind, dict[int, ExactScalar]]:
    """Parse and fully verify a cache file.

    Returns the verified entries; an absent or empty file yields an
    empty mapping (cold start).  Any schema problem or value conflict
    raises :class:`CacheError`.
    """
    path = Path(path)
    if not path.exists():
        return {}
    entries = _parse_cache(path)
    _verify(entries, path)
    return entries


def seed_engine(
    engine: InvariantEngine,
    entries: dict[InvariantKind, dict[int, ExactScalar]],
) -> None:
    """Feed verified cache entries into an engine's memo tables."""
    try:
        for kind, table in entries.items():
            for d, value in table.items():
                engine.seed(kind, d, value)
    except MemoConflictError as exc:
        raise CacheError(f"cache conflicts with engine state: {exc}")


__all__ = [
    "CacheError",
    "SCHEMA_VERSION",
    "load_cache",
    "save_cache",
    "seed_engine",
]
