"""Content-addressed result cache: JSON entries keyed by
(m, n, p, N, name, engine version), with a payload checksum.  A
corrupted or version-mismatched entry is treated as a miss.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

ENGINE_VERSION = 1


def _key_digest(m: int, n: int, p: int, N: int, name: str) -> str:
    key = json.dumps([m, n, p, N, name, ENGINE_VERSION])
    return hashlib.sha256(key.encode()).hexdigest()[:24]


def _payload_checksum(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    """File-per-entry JSON cache under a directory."""

    def __init__(self, cache_dir):
        self.dir = Path(cache_dir)
        self.dir.mkdir(parents=True, exist_ok=True)

    def _path(self, m, n, p, N, name) -> Path:
        return self.dir / f"{_key_digest(m, n, p, N, name)}.json"

    def get(self, m, n, p, N, name):
        """Cached payload, or None on miss/corruption."""
        path = self._path(m, n, p, N, name)
        try:
            with open(path) as fh:
                entry = json.load(fh)
        except (OSError, json.JSONDecodeError):
            return None
        if entry.get("engine") != ENGINE_VERSION:
            return None
        payload = entry.get("payload")
        if entry.get("checksum") != _payload_checksum(payload):
            return None
        return payload

    def put(self, m, n, p, N, name, payload):
        entry = {
            "engine": ENGINE_VERSION,
            "key": [m, n, p, N, name],
            "payload": payload,
            "checksum": _payload_checksum(payload),
        }
        path = self._path(m, n, p, N, name)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w") as fh:
            json.dump(entry, fh, sort_keys=True)
        os.replace(tmp, path)
        return payload

    def get_or_compute(self, m, n, p, N, name, compute):
        payload = self.get(m, n, p, N, name)
        if payload is None:
            payload = self.put(m, n, p, N, name, compute())
        return payload
