"""Deterministic parallel enumeration via search-tree prefix partitioning.

Workers receive disjoint bottom-row prefixes in lexicographic order and
enumerate completions independently; concatenating their outputs in prefix
order reproduces the single-worker stream exactly, so output bytes never
depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .configurations import DellacConfiguration, enumerate_dellac, enumerate_symmetric

KINDS = ("dellac", "symmetric")

_GENERATORS = {"dellac": enumerate_dellac, "symmetric": enumerate_symmetric}

_MAX_DEPTH = 5


def _grow(kind: str, n_cols: int, prefixes: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Extend each live prefix by one row, mirroring the enumerators'
    candidate rules so no subtree is lost or duplicated."""
    out = []
    for prefix in prefixes:
        i = len(prefix) + 1
        counts = [0] * (n_cols + 1)
        for c in prefix:
            counts[c] += 1
        if kind == "dellac":
            if i > 2 * n_cols:
                continue
            closing = i - n_cols
            if closing >= 1 and counts[closing] < 2:
                if counts[closing] == 0:
                    continue
                candidates = [closing]
            else:
                candidates = [
                    c for c in range(max(1, i - n_cols), min(n_cols, i) + 1)
                    if counts[c] < 2
                ]
        else:
            if i > n_cols:
                continue

            def load(c: int) -> int:
                partner = n_cols + 1 - c
                return counts[c] + counts[partner] if partner != c else 2 * counts[c]

            candidates = [c for c in range(1, min(i, n_cols) + 1) if load(c) < 2]
        out.extend(prefix + (c,) for c in candidates)
    return out


def partition_prefixes(kind: str, n_cols: int, target: int) -> list[tuple[int, ...]]:
    """Split the search tree into at least `target` prefix jobs when the
    tree allows it, in lexicographic order."""
    if kind not in _GENERATORS:
        raise ValueError(f"unknown enumeration kind {kind!r}")
    depth_cap = min(_MAX_DEPTH, n_cols if kind == "symmetric" else 2 * n_cols)
    prefixes: list[tuple[int, ...]] = [()]
    depth = 0
    while depth < depth_cap and len(prefixes) < target:
        grown = _grow(kind, n_cols, prefixes)
        if not grown:
            break
        prefixes = grown
        depth += 1
    return prefixes


def _complete(job: tuple[str, int, tuple[int, ...]]) -> list[tuple[int, ...]]:
    kind, n_cols, prefix = job
    return [cfg.row_to_col for cfg in _GENERATORS[kind](n_cols, prefix)]


def enumerate_family(kind: str, n_cols: int, threads: int = 1) -> list[DellacConfiguration]:
    """Enumerate the full or symmetric family in canonical lexicographic
    order, optionally fanning the search out over a process pool."""
    if kind not in _GENERATORS:
        raise ValueError(f"unknown enumeration kind {kind!r}")
    if threads < 1:
        raise ValueError(f"thread count must be >= 1, got {threads}")
    if threads == 1:
        return list(_GENERATORS[kind](n_cols))
    prefixes = partition_prefixes(kind, n_cols, target=4 * threads)
    if len(prefixes) <= 1:
        return list(_GENERATORS[kind](n_cols))
    jobs = [(kind, n_cols, prefix) for prefix in prefixes]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        chunks = list(pool.map(_complete, jobs))
    return [DellacConfiguration(n_cols, rows) for chunk in chunks for rows in chunk]
