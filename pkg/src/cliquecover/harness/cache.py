"""Append-only on-disk store of invariant bundles keyed by graph6 string."""

from __future__ import annotations

import fcntl
import json
import logging
import os
import random
from dataclasses import asdict, dataclass
from pathlib import Path

log = logging.getLogger(__name__)

CACHE_ENV = "CLIQUECOVER_CACHE"


@dataclass(frozen=True)
class Bundle:
    lcc: int
    chi: int
    alpha: int
    omega: int


class CacheMismatchError(RuntimeError):
    pass


class BundleCache:
    """Bundles for graphs already solved.

    The file holds one JSON object per line.  A line that does not parse means
    the file is discarded and rebuilt from scratch.  Writes are serialised with
    an advisory lock so several processes may share one file.
    """

    def __init__(self, path: str | os.PathLike | None = None, audit_rate: float = 0.01, seed: int = 0):
        self.path = Path(path) if path is not None else None
        self.audit_rate = audit_rate
        self._rng = random.Random(seed)
        self._data: dict[str, Bundle] = {}
        if self.path is not None and self.path.exists():
            self._load()

    @classmethod
    def from_env(cls, **kwargs) -> "BundleCache":
        return cls(os.environ.get(CACHE_ENV) or None, **kwargs)

    def _load(self) -> None:
        assert self.path is not None
        try:
            with self.path.open() as fh:
                for line in fh:
                    if line.strip():
                        rec = json.loads(line)
                        key = rec.pop("g6")
                        self._data[key] = Bundle(**rec)
        except (ValueError, TypeError, KeyError) as exc:
            log.warning("cache file %s is corrupt (%s); rebuilding from scratch", self.path, exc)
            self._data.clear()
            self.path.unlink()

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: str) -> bool:
        return key in self._data

    def get(self, key: str) -> Bundle | None:
        return self._data.get(key)

    def should_audit(self) -> bool:
        return self.audit_rate > 0 and self._rng.random() < self.audit_rate

    def put(self, key: str, value: Bundle) -> None:
        self.put_many([(key, value)])

    def put_many(self, items: list[tuple[str, Bundle]]) -> None:
        fresh = [(k, v) for k, v in items if k not in self._data]
        for k, v in fresh:
            self._data[k] = v
        if self.path is None or not fresh:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        text = "".join(json.dumps({"g6": k, **asdict(v)}, separators=(",", ":")) + "\n" for k, v in fresh)
        with self.path.open("a") as fh:
            fcntl.flock(fh, fcntl.LOCK_EX)
            try:
                fh.write(text)
            finally:
                fcntl.flock(fh, fcntl.LOCK_UN)
