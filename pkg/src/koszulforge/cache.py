"""Content-addressed cache of expensive computation results.

Keys are SHA-256 hashes of canonical JSON of the full inputs (presentation,
order, operation, bounds), so collisions are impossible by construction and
entries are immutable once written.  Writes are atomic (temp file plus
rename); an unwritable directory degrades to no caching with a warning.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile
import time
from pathlib import Path


def cache_key(payload) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


class ResultCache:
    """A directory of immutable JSON entries addressed by content hash."""

    def __init__(self, directory: str | os.PathLike | None, enabled: bool = True):
        self.directory = Path(directory) if directory else None
        self.enabled = enabled and self.directory is not None
        self.degraded = False
        if self.enabled:
            try:
                self.directory.mkdir(parents=True, exist_ok=True)
                probe = self.directory / ".writable"
                probe.write_text("")
                probe.unlink()
            except OSError as exc:
                print(f"warning: cache directory unusable ({exc}); caching disabled",
                      file=sys.stderr)
                self.enabled = False
                self.degraded = True

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> dict | None:
        if not self.enabled:
            return None
        path = self._path(key)
        if not path.exists():
            return None
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)

    def put(self, key: str, value: dict) -> None:
        """Store an entry; existing entries are never overwritten."""
        if not self.enabled:
            return
        path = self._path(key)
        if path.exists():
            return
        entry = {"key": key, "created_at": time.time(), "value": value}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(entry, fh, sort_keys=True)
            os.replace(tmp, path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def get_value(self, key: str) -> dict | None:
        entry = self.get(key)
        return entry["value"] if entry else None


def default_cache_dir() -> str | None:
    env = os.environ.get("KOSZUL_FORGE_CACHE")
    if env:
        return env
    return None
