"""On-disk q-expansion cache: one JSON file per series, keyed by a stable
hash of the generating parameters, with a human-readable manifest."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .qseries import QSeries


def cache_key(params: dict) -> str:
    """Stable content key: sha256 of the canonical parameter JSON."""
    canonical = json.dumps(params, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()[:16]


class SeriesCache:
    def __init__(self, directory: str | Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.manifest_path = self.directory / "manifest.json"

    def path_for(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, params: dict) -> QSeries | None:
        path = self.path_for(cache_key(params))
        if not path.exists():
            return None
        return QSeries.from_json_dict(json.loads(path.read_text()))

    def get_bytes(self, params: dict) -> bytes | None:
        path = self.path_for(cache_key(params))
        return path.read_bytes() if path.exists() else None

    def put(self, params: dict, series: QSeries) -> bytes:
        """Write atomically (temp file + rename); returns the stored bytes."""
        key = cache_key(params)
        payload = (json.dumps(series.to_json_dict(), indent=None) + "\n").encode()
        path = self.path_for(key)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
        self._record(key, params)
        return payload

    def _record(self, key: str, params: dict) -> None:
        manifest = {}
        if self.manifest_path.exists():
            manifest = json.loads(self.manifest_path.read_text())
        manifest[key] = params
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(manifest, fh, indent=2, sort_keys=True)
                fh.write("\n")
            os.replace(tmp, self.manifest_path)
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
