"""Versioned line-delimited JSON cache for Grothendieck-level results.

One JSONL file per cache directory; entries carry the artifact version and
are ignored (not deleted) when the version changes.  The directory comes
from --cache-dir, the MIXEDCHAIN_CACHE_DIR environment variable, or a
user-cache default, in that order.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

VERSION = "mixedchain-0.1.0"


def default_cache_dir() -> Path:
    env = os.environ.get("MIXEDCHAIN_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "mixedchain"


class Cache:
    def __init__(self, directory: Path | str | None = None):
        self.dir = Path(directory) if directory else default_cache_dir()
        self.path = self.dir / "cache.jsonl"
        self._entries: dict[str, object] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                if not line.strip():
                    continue
                try:
                    entry = json.loads(line)
                except json.JSONDecodeError:
                    continue
                if entry.get("version") == VERSION:
                    self._entries[entry["key"]] = entry["payload"]

    @staticmethod
    def key(*parts) -> str:
        return ":".join(str(p) for p in parts)

    def get(self, key: str):
        return self._entries.get(key)

    def put(self, key: str, payload) -> None:
        self._entries[key] = payload
        self.dir.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps({"version": VERSION, "key": key, "payload": payload},
                                sort_keys=True) + "\n")
