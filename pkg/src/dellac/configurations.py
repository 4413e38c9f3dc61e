"""Dellac configurations: validation, enumeration, and inversion statistics.

A Dellac configuration of size N is a tableau with N columns and 2N rows
holding 2N points: one point per row, two per column, and every point
(j, i) inside the diagonal band j <= i <= N + j. Columns are counted from
the left and rows from the bottom, both 1-based. Because each row holds
exactly one point, a configuration is stored as the tuple of column
indices (c_1, ..., c_{2N}) read from the bottom row up.

The central reflection R sends the box (j, i) to (N+1-j, 2N+1-i); the
configurations fixed by R form the symmetric family, which carries two
refined inversion statistics (`inv_tilde`, `inv_prime`) alongside the
plain inversion count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

Point = tuple[int, int]  # (column, row)
InversionPair = tuple[Point, Point]


class MalformedConfiguration(ValueError):
    """Row vector of the wrong shape: bad length or out-of-range entry."""


class NotSymmetricError(ValueError):
    """The operation is only defined on centrally symmetric configurations."""


@dataclass(frozen=True)
class DellacConfiguration:
    """Immutable row-to-column assignment for an N-column, 2N-row tableau."""

    n_cols: int
    row_to_col: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "row_to_col", tuple(self.row_to_col))

    @property
    def n_rows(self) -> int:
        return 2 * self.n_cols

    def points(self) -> tuple[Point, ...]:
        """The 2N points as (column, row) pairs, bottom row first."""
        return tuple((c, i) for i, c in enumerate(self.row_to_col, 1))

    def column_of(self, row: int) -> int:
        if not 1 <= row <= self.n_rows:
            raise MalformedConfiguration(f"row index {row} outside 1..{self.n_rows}")
        return self.row_to_col[row - 1]


@dataclass(frozen=True)
class InversionClassification:
    """Inversion census of a symmetric configuration.

    `self_symmetric` counts the inversions whose two points are swapped by
    the central reflection (the class is a single inversion); `paired`
    counts the rest, which come in mirror pairs, so it is always even.
    """

    total: int
    self_symmetric: int
    paired: int


def check_shape(cfg: DellacConfiguration) -> None:
    """Raise MalformedConfiguration unless the row vector has the right shape."""
    if cfg.n_cols < 1:
        raise MalformedConfiguration(f"n_cols must be >= 1, got {cfg.n_cols}")
    if len(cfg.row_to_col) != cfg.n_rows:
        raise MalformedConfiguration(
            f"expected {cfg.n_rows} rows for n_cols={cfg.n_cols}, got {len(cfg.row_to_col)}"
        )
    for i, c in enumerate(cfg.row_to_col, 1):
        if not isinstance(c, int) or isinstance(c, bool) or not 1 <= c <= cfg.n_cols:
            raise MalformedConfiguration(f"row {i}: column {c!r} outside 1..{cfg.n_cols}")


def validate_configuration(cfg: DellacConfiguration) -> list[str]:
    """Return [] when valid, else one message per violated condition.

    Shape problems (wrong length, entries outside 1..N) are structural
    errors and raise MalformedConfiguration instead of being returned.
    """
    check_shape(cfg)
    n = cfg.n_cols
    problems = []
    counts = Counter(cfg.row_to_col)
    for j in range(1, n + 1):
        if counts[j] != 2:
            problems.append(f"column {j} has {counts[j]} points (expected 2)")
    for i, c in enumerate(cfg.row_to_col, 1):
        if not c <= i <= n + c:
            problems.append(f"row {i}: point in column {c} outside band {c} <= {i} <= {n + c}")
    return problems


def is_valid(cfg: DellacConfiguration) -> bool:
    try:
        return not validate_configuration(cfg)
    except MalformedConfiguration:
        return False


def _check_prefix(n_cols: int, prefix: tuple[int, ...], bound: int) -> list[int]:
    """Validate a partial bottom-row assignment; return its column counts."""
    if len(prefix) > bound:
        raise ValueError(f"prefix longer than {bound} rows")
    counts = [0] * (n_cols + 1)
    for i, c in enumerate(prefix, 1):
        if not 1 <= c <= n_cols:
            raise ValueError(f"prefix row {i}: column {c} outside 1..{n_cols}")
        if not c <= i <= n_cols + c:
            raise ValueError(f"prefix row {i}: column {c} violates the band")
        if counts[c] == 2:
            raise ValueError(f"prefix overfills column {c}")
        counts[c] += 1
    return counts


def enumerate_dellac(
    n_cols: int, prefix: tuple[int, ...] = ()
) -> Iterator[DellacConfiguration]:
    """Yield every size-N configuration exactly once, in ascending
    lexicographic order of the row vector.

    With `prefix` the columns of the lowest rows are pinned and only the
    completions are produced; splitting the search tree by prefixes is how
    parallel enumeration stays deterministic.
    """
    if n_cols < 1:
        raise ValueError(f"n_cols must be >= 1, got {n_cols}")
    n = n_cols
    total = 2 * n
    counts = _check_prefix(n, prefix, total)
    # A column j can only be fed by rows j..N+j, so it must be complete
    # once the filled prefix has passed row N+j.
    for j in range(1, n + 1):
        if n + j <= len(prefix) and counts[j] != 2:
            raise ValueError(f"prefix leaves column {j} incomplete past its band")
    vec = list(prefix)

    def fill(i: int) -> Iterator[DellacConfiguration]:
        if i > total:
            yield DellacConfiguration(n, tuple(vec))
            return
        lo, hi = max(1, i - n), min(n, i)
        closing = i - n  # row i is the last chance to feed column i-N
        if closing >= 1 and counts[closing] < 2:
            if counts[closing] == 0:
                return  # two slots left, one row: dead branch
            candidates: Iterator[int] | tuple[int, ...] = (closing,)
        else:
            candidates = range(lo, hi + 1)
        for c in candidates:
            if counts[c] < 2:
                counts[c] += 1
                vec.append(c)
                yield from fill(i + 1)
                vec.pop()
                counts[c] -= 1

    yield from fill(len(prefix) + 1)


def enumerate_symmetric(
    n_cols: int, prefix: tuple[int, ...] = ()
) -> Iterator[DellacConfiguration]:
    """Yield the centrally symmetric configurations of size N in ascending
    lexicographic order.

    Only the bottom N rows are searched: row i <= N takes a column c <= i,
    the reflection forces column N+1-c at row 2N+1-i, and an assignment
    extends to a symmetric configuration iff every column pair {j, N+1-j}
    receives exactly two bottom-half points (for odd N the self-paired
    middle column receives exactly one). Since the bottom half determines
    the whole configuration, bottom-half lexicographic order agrees with
    full lexicographic order.
    """
    if n_cols < 1:
        raise ValueError(f"n_cols must be >= 1, got {n_cols}")
    n = n_cols
    counts = _check_prefix(n, prefix, n)

    def pair_load(c: int) -> int:
        partner = n + 1 - c
        return counts[c] + counts[partner] if partner != c else 2 * counts[c]

    for i, c in enumerate(prefix, 1):
        if c > i:
            raise ValueError(f"prefix row {i}: column {c} exceeds row index")
    for j in range(1, n + 1):
        if pair_load(j) > 2:
            raise ValueError(f"prefix overfills column pair {{{j}, {n + 1 - j}}}")
    vec = list(prefix)

    def fill(i: int) -> Iterator[DellacConfiguration]:
        if i > n:
            top = [n + 1 - c for c in reversed(vec)]
            yield DellacConfiguration(n, tuple(vec + top))
            return
        for c in range(1, min(i, n) + 1):
            if pair_load(c) < 2:
                counts[c] += 1
                vec.append(c)
                yield from fill(i + 1)
                vec.pop()
                counts[c] -= 1

    yield from fill(len(prefix) + 1)


def reflect_point(point: Point, n_cols: int) -> Point:
    j, i = point
    return (n_cols + 1 - j, 2 * n_cols + 1 - i)


def central_reflection(cfg: DellacConfiguration) -> DellacConfiguration:
    """Reflect through the tableau center; an involution preserving the band."""
    check_shape(cfg)
    n = cfg.n_cols
    rows = cfg.row_to_col
    return DellacConfiguration(
        n, tuple(n + 1 - rows[2 * n - i] for i in range(1, 2 * n + 1))
    )


def is_symmetric(cfg: DellacConfiguration) -> bool:
    return cfg.row_to_col == central_reflection(cfg).row_to_col


def inversions(cfg: DellacConfiguration) -> tuple[InversionPair, ...]:
    """All pairs ((j, i), (j', i')) of points with j < j' and i > i', sorted.

    The first point of a pair is the one in the smaller column (and hence
    the higher row).
    """
    check_shape(cfg)
    rows = cfg.row_to_col
    out = []
    for hi in range(2, cfg.n_rows + 1):
        c_hi = rows[hi - 1]
        for lo in range(1, hi):
            c_lo = rows[lo - 1]
            if c_hi < c_lo:
                out.append(((c_hi, hi), (c_lo, lo)))
    return tuple(sorted(out))


def inv(cfg: DellacConfiguration) -> int:
    return len(inversions(cfg))


def classify_inversions(cfg: DellacConfiguration) -> InversionClassification:
    """Split the inversions of a symmetric configuration by the reflection.

    R maps inversions to inversions and fixes no single box, so each class
    is either one inversion whose points R swaps, or a pair of distinct
    mirror-image inversions.
    """
    if not is_symmetric(cfg):
        raise NotSymmetricError("inversion classification requires R(cfg) == cfg")
    pairs = inversions(cfg)
    self_symmetric = sum(1 for p, q in pairs if reflect_point(p, cfg.n_cols) == q)
    paired = len(pairs) - self_symmetric
    if paired % 2:
        raise RuntimeError(
            f"internal: odd count {paired} of non-self-symmetric inversions"
        )
    return InversionClassification(len(pairs), self_symmetric, paired)


def inv_tilde(cfg: DellacConfiguration) -> int:
    """Number of inversion classes under the central reflection."""
    cls = classify_inversions(cfg)
    return cls.self_symmetric + cls.paired // 2


def inv_prime(cfg: DellacConfiguration) -> int:
    """Half the number of inversions not fixed setwise by the reflection."""
    return classify_inversions(cfg).paired // 2
