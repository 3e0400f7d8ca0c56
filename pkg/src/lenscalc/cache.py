"""Checksummed on-disk cache for embedding-search results.

The exhaustive search in :mod:`.lattice` is the only expensive step in the
package, and its output for a given coefficient string never changes, so
results are cached as JSON files keyed by the string.  Each entry carries a
SHA-256 checksum of its payload; a file that fails to parse or to verify is
ignored with a logged warning and overwritten on the next store.  The cache
directory defaults to ``$LENSCALC_CACHE_DIR`` and no caching happens when
neither that variable nor an explicit directory is given.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Optional, Sequence

from .lattice import LatticeEmbedding

logger = logging.getLogger(__name__)

CACHE_DIR_ENV = "LENSCALC_CACHE_DIR"


def _canonical_payload(key: str, classes: Sequence[LatticeEmbedding]) -> str:
    body = {
        "key": key,
        "embeddings": [[list(row) for row in emb.rows] for emb in classes],
    }
    return json.dumps(body, sort_keys=True, separators=(",", ":"))


def _checksum(payload: str) -> str:
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class EmbeddingCache:
    """Directory-backed store mapping coefficient strings to class lists."""

    def __init__(self, directory: Optional[os.PathLike | str] = None):
        if directory is None:
            directory = os.environ.get(CACHE_DIR_ENV)
        self.directory = Path(directory) if directory else None
        if self.directory is not None:
            self.directory.mkdir(parents=True, exist_ok=True)

    @property
    def enabled(self) -> bool:
        return self.directory is not None

    @staticmethod
    def key_for(coefficients: Sequence[int]) -> str:
        return ",".join(str(int(c)) for c in coefficients)

    def _path(self, key: str) -> Path:
        assert self.directory is not None
        name = hashlib.sha256(key.encode("utf-8")).hexdigest()
        return self.directory / f"{name}.json"

    def load(self, coefficients: Sequence[int]) -> Optional[list[LatticeEmbedding]]:
        """Stored classes for this string, or None on miss/corruption."""
        if not self.enabled:
            return None
        key = self.key_for(coefficients)
        path = self._path(key)
        if not path.exists():
            return None
        try:
            entry = json.loads(path.read_text(encoding="utf-8"))
            body = {"key": entry["key"], "embeddings": entry["embeddings"]}
            payload = json.dumps(body, sort_keys=True, separators=(",", ":"))
            if entry["key"] != key or _checksum(payload) != entry["checksum"]:
                raise ValueError("checksum mismatch")
            return [
                LatticeEmbedding(tuple(tuple(int(x) for x in row) for row in rows))
                for rows in entry["embeddings"]
            ]
        except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
            logger.warning("ignoring unusable cache entry %s (%s)", path.name, exc)
            return None

    def store(self, coefficients: Sequence[int], classes: Sequence[LatticeEmbedding]) -> None:
        if not self.enabled:
            return
        key = self.key_for(coefficients)
        payload = _canonical_payload(key, classes)
        entry = {
            "key": key,
            "embeddings": [[list(row) for row in emb.rows] for emb in classes],
            "checksum": _checksum(payload),
        }
        self._path(key).write_text(json.dumps(entry, indent=1), encoding="utf-8")


def cached_find_embeddings(
    coefficients: Sequence[int], cache: Optional[EmbeddingCache] = None
) -> list[LatticeEmbedding]:
    """find_embeddings with read-through caching (cache may be disabled)."""
    from .lattice import IntersectionForm, find_embeddings

    if cache is None:
        cache = EmbeddingCache()
    hit = cache.load(coefficients)
    if hit is not None:
        return hit
    classes = find_embeddings(IntersectionForm(tuple(coefficients)))
    cache.store(coefficients, classes)
    return classes
