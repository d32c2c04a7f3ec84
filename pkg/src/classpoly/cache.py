"""Append-only persistent cache of class polynomial decompositions.

File format: JSON lines, one decomposition per line,

    {"datum_hash": ..., "element_key": ..., "decomposition": {class_id:
     [[power, coeff], ...]}, "engine_version": ...}

The file is replayable (loading is idempotent) and mergeable; any two lines
for the same (datum_hash, element_key) must carry equal decompositions, and a
mismatch is a fatal integrity error rather than a silent overwrite.  Writes
go through a single lock, keeping the append-only discipline under
concurrent scans.
"""

from __future__ import annotations

import json
import threading

from .errors import IntegrityError
from .hecke_cocenter import ENGINE_VERSION


def _canonical(pairs_by_class) -> dict:
    return {cid: [[int(p), int(c)] for p, c in pairs]
            for cid, pairs in sorted(pairs_by_class.items())}


class ClassPolyCache:
    """In-memory view of a JSON-lines cache file, with append-through writes."""

    def __init__(self, path=None):
        self.path = path
        self._entries: dict[tuple[str, str], dict] = {}
        self._lock = threading.Lock()
        if path is not None:
            self._replay(path)

    def _replay(self, path) -> None:
        try:
            fh = open(path, "r", encoding="utf-8")
        except FileNotFoundError:
            return
        with fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    key = (rec["datum_hash"], rec["element_key"])
                    dec = _canonical(rec["decomposition"])
                except (ValueError, KeyError, TypeError) as exc:
                    raise IntegrityError(f"{path}:{lineno}: malformed cache line ({exc})")
                self._store(key, dec, f"{path}:{lineno}")

    def _store(self, key, dec, origin) -> None:
        known = self._entries.get(key)
        if known is not None and known != dec:
            raise IntegrityError(
                f"{origin}: decomposition for {key[1]!r} conflicts with a cached value")
        self._entries[key] = dec

    def __len__(self):
        return len(self._entries)

    def get(self, datum_hash: str, element_key: str):
        return self._entries.get((datum_hash, element_key))

    def put(self, datum_hash: str, element_key: str, pairs_by_class) -> None:
        dec = _canonical(pairs_by_class)
        key = (datum_hash, element_key)
        with self._lock:
            if key in self._entries:
                self._store(key, dec, "recomputation")
                return
            self._entries[key] = dec
            if self.path is not None:
                rec = {"datum_hash": datum_hash, "element_key": element_key,
                       "decomposition": dec, "engine_version": ENGINE_VERSION}
                with open(self.path, "a", encoding="utf-8") as fh:
                    fh.write(json.dumps(rec, sort_keys=True) + "\n")

    def merge_file(self, path) -> int:
        """Replay another cache file into this one; equality-checked. Returns lines added."""
        other = ClassPolyCache(path)
        added = 0
        for (dh, ek), dec in sorted(other._entries.items()):
            before = len(self._entries)
            self.put(dh, ek, dec)
            added += len(self._entries) - before
        return added
