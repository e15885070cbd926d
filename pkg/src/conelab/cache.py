"""Content-addressed result cache and double-description checkpoints.

The cache directory comes from CONELAB_CACHE (default .conelab-cache/); keys
are sha256 hashes of the canonical JSON of the input representation plus the
algorithm parameters, so a cached conversion reloaded from disk is
bit-identical to a fresh computation.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .conefile import dumps_canonical

ENGINE_VERSION = 1


def default_cache_dir() -> Path:
    return Path(os.environ.get("CONELAB_CACHE", ".conelab-cache"))


class Checkpoint:
    """Atomic save/load of engine state, throttled to every k-th step."""

    def __init__(self, path: Path, every: int = 1):
        self.path = Path(path)
        self.every = max(int(every), 1)

    def load(self) -> dict | None:
        if not self.path.exists():
            return None
        return json.loads(self.path.read_text())

    def save(self, state: dict):
        if state["t"] % self.every:
            return
        self.flush(state)

    def flush(self, state: dict):
        tmp = self.path.with_suffix(".tmp")
        tmp.write_text(json.dumps(state))
        tmp.replace(self.path)

    def clear(self):
        self.path.unlink(missing_ok=True)
        self.path.with_suffix(".tmp").unlink(missing_ok=True)


class Cache:
    def __init__(self, root=None):
        self.root = Path(root) if root is not None else default_cache_dir()

    def key_for(self, payload: dict) -> str:
        return hashlib.sha256(dumps_canonical(payload)).hexdigest()

    def _path(self, key: str, suffix: str = ".json") -> Path:
        return self.root / f"{key}{suffix}"

    def get(self, key: str) -> dict | None:
        p = self._path(key)
        if not p.exists():
            return None
        return json.loads(p.read_text())

    def put(self, key: str, obj: dict):
        self.root.mkdir(parents=True, exist_ok=True)
        tmp = self._path(key, ".json.tmp")
        tmp.write_text(json.dumps(obj, sort_keys=True))
        tmp.replace(self._path(key))

    def checkpoint(self, key: str, every: int = 1) -> Checkpoint:
        self.root.mkdir(parents=True, exist_ok=True)
        return Checkpoint(self._path(key, ".ckpt.json"), every=every)
