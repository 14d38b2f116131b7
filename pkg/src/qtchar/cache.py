"""Content-addressed on-disk cache of serialized results.

Entries live under ``$QTCHAR_CACHE_DIR`` (default ``~/.cache/qtchar``).  Each
file starts with a ``sha256:<hex>`` line over the payload; an entry whose
checksum does not match is discarded and treated as a miss.  Writers and
readers take an advisory file lock so concurrent invocations are safe.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from filelock import FileLock

ENV_VAR = "QTCHAR_CACHE_DIR"
FORMAT_VERSION = 1


def cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path.home() / ".cache" / "qtchar"


def cache_key(**fields) -> str:
    """Stable key over the request fields (family, rank, node, shift, limits, t-flag, ...)."""
    doc = json.dumps({"v": FORMAT_VERSION, **fields}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(doc.encode()).hexdigest()


class ResultCache:
    def __init__(self, root: Path | str | None = None):
        self.root = Path(root) if root is not None else cache_dir()

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.qtc"

    def _lock(self) -> FileLock:
        self.root.mkdir(parents=True, exist_ok=True)
        return FileLock(str(self.root / ".lock"))

    def get(self, key: str) -> bytes | None:
        path = self._path(key)
        if not path.exists():
            return None
        with self._lock():
            try:
                raw = path.read_bytes()
            except FileNotFoundError:
                return None
            header, sep, payload = raw.partition(b"\n")
            if sep and header == b"sha256:" + hashlib.sha256(payload).hexdigest().encode():
                return payload
            path.unlink(missing_ok=True)
            return None

    def put(self, key: str, payload: bytes) -> None:
        path = self._path(key)
        with self._lock():
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_bytes(b"sha256:" + hashlib.sha256(payload).hexdigest().encode() + b"\n" + payload)
            os.replace(tmp, path)

    def status(self) -> dict:
        files = list(self.root.glob("*/*.qtc")) if self.root.exists() else []
        return {"path": str(self.root), "entries": len(files),
                "bytes": sum(f.stat().st_size for f in files)}

    def clear(self) -> int:
        if not self.root.exists():
            return 0
        n = 0
        with self._lock():
            for f in self.root.glob("*/*.qtc"):
                f.unlink()
                n += 1
        return n


def cached(cache: ResultCache | None, key: str, compute) -> bytes:
    """Return the cached payload for key, computing and storing it on a miss."""
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    payload = compute()
    if cache is not None:
        cache.put(key, payload)
    return payload
