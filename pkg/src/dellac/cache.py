"""On-disk replay cache for enumerations.

Files are keyed by command, family, size, and package version, so a cache
written by one code version is never replayed by another. Contents are the
same JSON-lines wire form the CLI emits; a cached run replays byte for
byte.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from . import __version__
from .configurations import DellacConfiguration
from .parallel import enumerate_family
from .serialize import read_configurations, write_configurations

ENV_CACHE_DIR = "DELLAC_CACHE_DIR"


def resolve_cache_dir(explicit: str | None) -> Path | None:
    """Explicit flag wins, then the environment, else caching is off."""
    chosen = explicit if explicit is not None else os.environ.get(ENV_CACHE_DIR)
    return Path(chosen) if chosen else None


def cache_file(cache_dir: Path, command: str, kind: str, n_cols: int) -> Path:
    return cache_dir / f"{command}-{kind}-N{n_cols}-v{__version__}.jsonl"


def cached_enumeration(
    kind: str,
    n_cols: int,
    threads: int = 1,
    cache_dir: Path | None = None,
    command: str = "enumerate",
) -> list[DellacConfiguration]:
    """Enumerate through the cache: replay an existing file, else compute
    and store atomically."""
    if cache_dir is None:
        return enumerate_family(kind, n_cols, threads)
    path = cache_file(cache_dir, command, kind, n_cols)
    if path.exists():
        with path.open() as stream:
            return read_configurations(stream)
    cfgs = enumerate_family(kind, n_cols, threads)
    cache_dir.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as stream:
            write_configurations(stream, cfgs, "json")
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return cfgs
