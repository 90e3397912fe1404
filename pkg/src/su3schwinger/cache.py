"""Content-addressed on-disk cache for serialized state bodies.

Keys hash the canonical request (plus method and format version), so any
schema change invalidates cleanly.  A hit returns the stored body verbatim,
byte-identical to a fresh computation.
"""

from __future__ import annotations

import hashlib
import json
import time
from pathlib import Path

ENV_CACHE_DIR = "SU3SCHWINGER_CACHE"


def cache_key(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


class CatalogCache:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def get(self, key: str) -> str | None:
        path = self._path(key)
        if not path.exists():
            return None
        entry = json.loads(path.read_text(encoding="utf-8"))
        return entry["body"]

    def put(self, key: str, body: str) -> None:
        entry = {"key": key, "created_at": time.time(), "body": body}
        self._path(key).write_text(json.dumps(entry), encoding="utf-8")
