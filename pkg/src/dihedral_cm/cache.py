"""On-disk cache of central lifts.

Entries are JSON files keyed by (d, element name, convention version).  The
convention hash covers every choice that changes the stored PBW coefficients,
so a change of convention makes old entries stale rather than wrong.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional

from .cherednik import PBWElement

ENV_VAR = "DIHEDRAL_CM_CACHE"

CONVENTION = {
    "t_sign": "+1",  # [x, X] = t - sum c_i s_i
    "monomial_order": "graded lex, variables X Y x y A B t",
    "group_codes": "c^g for g < d, s_(g-d) otherwise",
    "format": 1,
}


def convention_hash() -> str:
    text = json.dumps(CONVENTION, sort_keys=True)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def default_directory() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "dihedral_cm"


def _checksum(value: dict) -> str:
    return hashlib.sha256(json.dumps(value, sort_keys=True).encode()).hexdigest()


@dataclass
class CacheEntry:
    d: int
    name: str
    convention: str
    value: dict
    checksum: str

    def element(self) -> PBWElement:
        return PBWElement.from_json(self.value)

    def valid(self) -> bool:
        return self.convention == convention_hash() and _checksum(self.value) == self.checksum

    def to_json(self) -> dict:
        return {"key": {"d": self.d, "name": self.name, "convention": self.convention},
                "value": self.value, "checksum": self.checksum}

    @classmethod
    def from_json(cls, data: dict) -> "CacheEntry":
        key = data["key"]
        return cls(int(key["d"]), key["name"], key["convention"], data["value"], data["checksum"])


class CentralCache:
    def __init__(self, directory: Optional[Path] = None) -> None:
        self.directory = Path(directory) if directory is not None else default_directory()
        self.hits = 0
        self.misses = 0

    def _path(self, d: int, name: str, convention: Optional[str] = None) -> Path:
        return self.directory / f"d{d}_{name}_{convention or convention_hash()}.json"

    def get(self, d: int, name: str) -> Optional[PBWElement]:
        path = self._path(d, name)
        try:
            entry = CacheEntry.from_json(json.loads(path.read_text(encoding="utf-8")))
        except (OSError, ValueError, KeyError):
            self.misses += 1
            return None
        if not entry.valid() or entry.d != d or entry.name != name:
            path.unlink(missing_ok=True)
            self.misses += 1
            return None
        self.hits += 1
        return entry.element()

    def put(self, d: int, name: str, element: PBWElement) -> Path:
        value = element.to_json()
        entry = CacheEntry(d, name, convention_hash(), value, _checksum(value))
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(d, name)
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp_", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(entry.to_json(), fh, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        return path

    def entries(self) -> List[Dict[str, object]]:
        out = []
        if not self.directory.is_dir():
            return out
        for path in sorted(self.directory.glob("d*_*.json")):
            try:
                entry = CacheEntry.from_json(json.loads(path.read_text(encoding="utf-8")))
                status = "ok" if entry.valid() else "stale"
                out.append({"file": path.name, "d": entry.d, "name": entry.name,
                            "terms": len(entry.value["terms"]), "status": status})
            except (OSError, ValueError, KeyError):
                out.append({"file": path.name, "status": "unreadable"})
        return out

    def clear(self) -> int:
        n = 0
        if self.directory.is_dir():
            for path in self.directory.glob("d*_*.json"):
                path.unlink()
                n += 1
        return n
