"""On-disk cache of L-polynomials: one JSON document per curve and base field."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .zeta import LPolynomial, parse, render, validate

ENV_VAR = "AS_ZETA_CACHE"


class CacheCorruption(RuntimeError):
    """A cache file exists but cannot be trusted."""


@dataclass(frozen=True)
class CacheEntry:
    key: str
    text: str
    tool_version: str
    timestamp: str

    def to_json(self) -> str:
        return json.dumps(
            {"key": self.key, "lpoly": self.text, "tool_version": self.tool_version, "timestamp": self.timestamp},
            indent=1,
        )


def cache_dir(flag: str | None) -> Path | None:
    """--cache-dir, overridden by the environment variable when set."""
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(flag) if flag else None


def _path(root: Path, key: str) -> Path:
    return root / (key.replace(":", "_") + ".json")


def load(root: Path, key: str, p: int, r: int) -> LPolynomial | None:
    path = _path(root, key)
    if not path.exists():
        return None
    try:
        obj = json.loads(path.read_text())
        if obj["key"] != key:
            raise CacheCorruption(f"{path}: key {obj['key']!r} does not match {key!r}")
        L = parse(obj["lpoly"], p, r)
    except (ValueError, KeyError, TypeError) as exc:
        raise CacheCorruption(f"{path}: {exc}") from exc
    bad = validate(L)
    if bad:
        raise CacheCorruption(f"{path}: cached polynomial fails validation ({bad[0]})")
    return L


def store(root: Path, key: str, L: LPolynomial) -> CacheEntry:
    root.mkdir(parents=True, exist_ok=True)
    entry = CacheEntry(key, render(L), __version__, datetime.now(timezone.utc).isoformat())
    _path(root, key).write_text(entry.to_json())
    return entry
