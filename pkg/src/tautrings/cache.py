from __future__ import annotations

import hashlib
import json
import os
from typing import Dict

from .correlators import CorrelatorTable
from .exactmath import bernoulli

__all__ = ["CacheFile", "CACHE_VERSION", "CacheError"]

CACHE_VERSION = "1"


class CacheError(ValueError):
    pass


def _canonical_payload(sections: Dict[str, Dict[str, str]]) -> str:
    return json.dumps(sections, sort_keys=True, separators=(",", ":"))


class CacheFile:
    """Single versioned, human-readable cache file.

    Layout: {"version", "sections": {"correlators": {...}, "bernoulli":
    {...}}, "checksum"}; all rationals are "num/den" strings, keys sorted,
    so load-then-save is byte-identical when nothing was added.  A version
    mismatch or checksum mismatch is rejected, never migrated.
    """

    def __init__(self, path: str) -> None:
        self.path = path
        self.sections: Dict[str, Dict[str, str]] = {
            "correlators": {}, "bernoulli": {}}

    def load(self) -> "CacheFile":
        if not os.path.exists(self.path):
            return self
        with open(self.path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if data.get("version") != CACHE_VERSION:
            raise CacheError(
                f"cache version {data.get('version')!r} != {CACHE_VERSION!r}")
        sections = data.get("sections", {})
        payload = _canonical_payload(sections)
        digest = hashlib.sha256(payload.encode("utf-8")).hexdigest()
        if data.get("checksum") != digest:
            raise CacheError("cache checksum mismatch")
        self.sections = {k: dict(v) for k, v in sections.items()}
        self.sections.setdefault("correlators", {})
        self.sections.setdefault("bernoulli", {})
        return self

    def save(self) -> None:
        payload = _canonical_payload(self.sections)
        digest = hashlib.sha256(payload.encode("utf-8")).hexdigest()
        body = json.dumps(
            {"version": CACHE_VERSION, "sections": self.sections,
             "checksum": digest},
            sort_keys=True, indent=1)
        tmp = self.path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
        os.replace(tmp, self.path)

    # -- section adapters ---------------------------------------------------

    def attach_correlators(self, table: CorrelatorTable) -> None:
        table.load(self.sections["correlators"])

    def collect(self, table: CorrelatorTable, bernoulli_upto: int = 0) -> None:
        self.sections["correlators"].update(table.snapshot())
        for m in range(0, bernoulli_upto + 1):
            b = bernoulli(m)
            self.sections["bernoulli"][str(m)] = f"{b.numerator}/{b.denominator}"
