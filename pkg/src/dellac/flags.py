"""Index collections labeling coordinate-flag cells, and the dimension
algorithms of the five families.

A collection (I_1, ..., I_m) of subsets of {1..N} satisfies |I_k| = k and
I_k <= I_{k+1} + {k+1}: an element may leave the chain at step k+1 only if
it equals k+1. Type A chains run to m = N-1; the symplectic and orthogonal
families stop at m = n = N // 2 and add an isotropy condition on I_n: no
pair {a, N+1-a} of distinct values may lie in I_n (for odd N the
self-paired middle value (N+1)/2 is exempt, in both families).

Each step k carries its own total order on {1..N},

    k+1 <_k k+2 <_k ... <_k N <_k 1 <_k ... <_k k,

and dimension counting is slot counting in these orders. An element of I_k
is *initiating* when it first enters the chain at step k (i == k or
i not in I_{k-1}); each initiating element contributes the number of empty
slots below it, and the symplectic families subtract isotropy corrections
computed by `s_statistic`.

Every symplectic/orthogonal collection also maps to a centrally symmetric
Dellac configuration (`to_dellac` / `from_dellac`); the dimension
algorithms here and the inversion statistics on those configurations are
independent routes to the same numbers, which is what the verification
suite exploits.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .configurations import (
    DellacConfiguration,
    NotSymmetricError,
    inv_prime,
    is_symmetric,
    reflect_point,
    validate_configuration,
)


class InconsistencyError(RuntimeError):
    """Two formulations that must agree did not, or an internal construction
    produced an invalid object. Never resolved silently."""


class Family(enum.Enum):
    TYPE_A = "a"
    SP_EVEN = "sp-even"
    SP_ODD = "sp-odd"
    SO_EVEN = "so-even"
    SO_ODD = "so-odd"

    @classmethod
    def from_tag(cls, tag: str) -> "Family":
        for member in cls:
            if member.value == tag:
                return member
        raise ValueError(f"unknown family tag {tag!r}")

    @property
    def is_type_a(self) -> bool:
        return self is Family.TYPE_A

    @property
    def is_symplectic(self) -> bool:
        return self in (Family.SP_EVEN, Family.SP_ODD)

    @property
    def is_orthogonal(self) -> bool:
        return self in (Family.SO_EVEN, Family.SO_ODD)

    @property
    def parity(self) -> int | None:
        """Required parity of the ambient size (None: both allowed)."""
        if self in (Family.SP_EVEN, Family.SO_EVEN):
            return 0
        if self in (Family.SP_ODD, Family.SO_ODD):
            return 1
        return None

    def check_size(self, n_ambient: int) -> None:
        if n_ambient < 1:
            raise ValueError(f"ambient size must be >= 1, got {n_ambient}")
        if self.parity is not None and n_ambient % 2 != self.parity:
            raise ValueError(
                f"family {self.value!r} needs an "
                f"{'even' if self.parity == 0 else 'odd'} size, got {n_ambient}"
            )

    def chain_length(self, n_ambient: int) -> int:
        self.check_size(n_ambient)
        return n_ambient - 1 if self.is_type_a else n_ambient // 2


@dataclass(frozen=True)
class IndexCollection:
    """A family-tagged chain of subsets of {1..n_ambient}."""

    family: Family
    n_ambient: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))

    def as_sorted_lists(self) -> list[list[int]]:
        return [sorted(s) for s in self.sets]


def ordering_position(x: int, k: int, n_ambient: int) -> int:
    """0-based rank of x in the order k+1 <_k k+2 <_k ... <_k N <_k 1 <_k ... <_k k."""
    if not 1 <= x <= n_ambient:
        raise ValueError(f"value {x} outside 1..{n_ambient}")
    if not 1 <= k <= n_ambient - 1:
        raise ValueError(f"ordering index {k} outside 1..{n_ambient - 1}")
    return x - k - 1 if x > k else n_ambient - k + x - 1


def ordering_less(a: int, b: int, k: int, n_ambient: int) -> bool:
    """True iff a <_k b.

    >>> ordering_less(2, 1, 1, 3)   # order is 2 <_1 3 <_1 1
    True
    >>> ordering_less(3, 7, 2, 8)   # order starts at 3
    True
    """
    return ordering_position(a, k, n_ambient) < ordering_position(b, k, n_ambient)


def s_statistic(a: int, b: int, k: int, n: int) -> int:
    """Isotropy correction on the ground set {1..2n}.

    Equals 1 when both a and b lie in the top 2k positions of the k-th
    order (the set {2n-k+1, ..., 2n, 1, ..., k}) and 2n+1-b <_k a, else 0.
    Pairs with a + b = 2n + 1 are outside the domain and raise.
    """
    ground = 2 * n
    if not 1 <= k <= n:
        raise ValueError(f"step {k} outside 1..{n}")
    for value in (a, b):
        if not 1 <= value <= ground:
            raise ValueError(f"value {value} outside 1..{ground}")
    if a + b == ground + 1:
        raise ValueError(f"s({a},{b},{k}) undefined: {a} + {b} = 2n + 1")
    top = ordering_position(ground - k + 1, k, ground)
    if (
        ordering_position(a, k, ground) >= top
        and ordering_position(b, k, ground) >= top
        and ordering_less(ground + 1 - b, a, k, ground)
    ):
        return 1
    return 0


def _isotropic(members: frozenset[int], n_ambient: int) -> bool:
    return all(
        n_ambient + 1 - a not in members or n_ambient + 1 - a == a for a in members
    )


def validate_collection(collection: IndexCollection) -> list[str]:
    """Return [] when valid, else one message per violated condition.

    Structural problems (bad family/size pairing, wrong chain length,
    entries outside the ground set) raise ValueError.
    """
    family, n, sets = collection.family, collection.n_ambient, collection.sets
    family.check_size(n)
    m = family.chain_length(n)
    if len(sets) != m:
        raise ValueError(f"expected {m} sets for {family.value!r} N={n}, got {len(sets)}")
    for k, members in enumerate(sets, 1):
        for x in members:
            if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= n:
                raise ValueError(f"I_{k}: entry {x!r} outside 1..{n}")
    problems = []
    for k, members in enumerate(sets, 1):
        if len(members) != k:
            problems.append(f"I_{k} has {len(members)} elements (expected {k})")
    for k in range(1, m):
        extra = sets[k - 1] - (sets[k] | {k + 1})
        if extra:
            problems.append(
                f"I_{k} not contained in I_{k + 1} + {{{k + 1}}}: {sorted(extra)} escape"
            )
    if not family.is_type_a and m >= 1 and not _isotropic(sets[-1], n):
        bad = sorted(a for a in sets[-1] if n + 1 - a in sets[-1] and n + 1 - a != a)
        problems.append(f"I_{m} contains forbidden pair(s) {{a, N+1-a}}: {bad}")
    return problems


def _require_valid(collection: IndexCollection) -> None:
    problems = validate_collection(collection)
    if problems:
        raise ValueError("invalid collection: " + "; ".join(problems))


def enumerate_collections(family: Family, n_ambient: int) -> Iterator[IndexCollection]:
    """Yield every valid collection exactly once, ordered by the ascending
    tuples of elements added at each step."""
    m = family.chain_length(n_ambient)
    ground = frozenset(range(1, n_ambient + 1))

    def extend(chain: list[frozenset[int]]) -> Iterator[IndexCollection]:
        k = len(chain) + 1
        if k > m:
            yield IndexCollection(family, n_ambient, tuple(chain))
            return
        base = chain[-1] - {k} if chain else frozenset()
        need = k - len(base)
        candidates = sorted(ground - base)
        for addition in itertools.combinations(candidates, need):
            members = base | set(addition)
            if k == m and not family.is_type_a and not _isotropic(members, n_ambient):
                continue
            chain.append(frozenset(members))
            yield from extend(chain)
            chain.pop()

    yield from extend([])


def _initiating(current: frozenset[int], previous: frozenset[int], k: int) -> frozenset[int]:
    return frozenset(i for i in current if i == k or i not in previous)


def initiating_elements(collection: IndexCollection, k: int) -> frozenset[int]:
    """Elements of I_k that first enter the chain at step k."""
    if not 1 <= k <= len(collection.sets):
        raise ValueError(f"step {k} outside 1..{len(collection.sets)}")
    previous = collection.sets[k - 2] if k >= 2 else frozenset()
    return _initiating(collection.sets[k - 1], previous, k)


def _empty_slots_below(x: int, occupied: frozenset[int], k: int, n_ambient: int) -> int:
    rank = ordering_position(x, k, n_ambient)
    return sum(
        1
        for y in range(1, n_ambient + 1)
        if y not in occupied and ordering_position(y, k, n_ambient) < rank
    )


def dim_type_a(collection: IndexCollection, degrees: Iterable[int] | None = None) -> int:
    """Cell dimension in the type A sense: over each step k (optionally a
    partial list of degrees), every initiating element of I_k contributes
    the number of slots below it in the k-th order not occupied by I_k."""
    _require_valid(collection)
    n, sets = collection.n_ambient, collection.sets
    m = len(sets)
    steps = range(1, m + 1) if degrees is None else list(degrees)
    total = 0
    for k in steps:
        if not 1 <= k <= m:
            raise ValueError(f"degree {k} outside 1..{m}")
        current = sets[k - 1]
        previous = sets[k - 2] if k >= 2 else frozenset()
        for i in _initiating(current, previous, k):
            total += _empty_slots_below(i, current, k, n)
    return total


@dataclass(frozen=True)
class DiskContribution:
    """One initiating element's share of a dimension step: its empty-slot
    count and the corrections against the occupied slots below it."""

    element: int
    slots: int
    s_values: tuple[int, ...]


@dataclass(frozen=True)
class DimensionStep:
    k: int
    value: int  # running dimension d_k
    disks: tuple[DiskContribution, ...]


@dataclass(frozen=True)
class DimensionTrace:
    """Per-step record of the inductive dimension computation.

    `excluded_pairs` lists the (k, a, b) correction lookups that fell on
    a + b = 2n + 1, outside the correction's stated domain; they contribute
    zero (both defining clauses already fail there) and are surfaced for
    the verification report rather than hidden.

    `form_disagreements` records steps where the per-disk variant that
    subtracts corrections only against occupied slots *below* each
    initiating element differs from the case-split recurrence, as
    (k, recurrence_increment, below_only_increment). The recurrence is the
    value used; the comparison is reported, not resolved.
    """

    steps: tuple[DimensionStep, ...]
    excluded_pairs: tuple[tuple[int, int, int], ...] = ()
    form_disagreements: tuple[tuple[int, int, int], ...] = ()

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(step.value for step in self.steps)

    @property
    def dimension(self) -> int:
        return self.steps[-1].value if self.steps else 0

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "excluded_pairs": [list(t) for t in self.excluded_pairs],
            "form_disagreements": [list(t) for t in self.form_disagreements],
            "steps": [
                {
                    "k": step.k,
                    "value": step.value,
                    "disks": [
                        {
                            "element": d.element,
                            "slots": d.slots,
                            "s_values": list(d.s_values),
                        }
                        for d in step.disks
                    ],
                }
                for step in self.steps
            ],
        }


def _s_or_zero(a: int, b: int, k: int, n: int, events: set[tuple[int, int, int]]) -> int:
    if a + b == 2 * n + 1:
        events.add((k, a, b))
        return 0
    return s_statistic(a, b, k, n)


def dim_sp_even(collection: IndexCollection) -> DimensionTrace:
    """Inductive dimension computation for an even symplectic collection.

    Each step processes the entering elements in ascending k-th order. An
    entrant contributes its empty-slot count minus corrections s(entrant,
    partner, k) against every element already in place: the carried-over
    members of I_{k-1} plus any entrant processed before it. When two
    elements enter at once (k itself was allowed to drop out of I_{k-1})
    this is exactly the two-element recurrence with its -1 overlap term
    folded into the higher entrant's slot count.

    A variant that corrects only against occupied slots *below* each
    entrant is computed in parallel; steps where it differs are recorded
    on the trace (`form_disagreements`), never silently resolved. The
    returned dimensions always come from the full-partner recurrence,
    which is the route that matches the inversion statistic on the
    attached symmetric configuration.
    """
    if collection.family is not Family.SP_EVEN:
        raise ValueError(f"expected an sp-even collection, got {collection.family.value!r}")
    _require_valid(collection)
    N, sets = collection.n_ambient, collection.sets
    n = N // 2
    pos = ordering_position
    events: set[tuple[int, int, int]] = set()
    scratch: set[tuple[int, int, int]] = set()
    disagreements = []
    running = 0
    steps = []
    for k in range(1, n + 1):
        current = sets[k - 1]
        previous = sets[k - 2] if k >= 2 else frozenset()
        carried = previous - {k}
        entrants = sorted(current - carried, key=lambda x: pos(x, k, N))

        disks = []
        increment = 0
        in_place = set(carried)
        for entrant in entrants:
            partners = sorted(in_place, key=lambda x: pos(x, k, N))
            slots = _empty_slots_below(entrant, current, k, N)
            s_values = tuple(
                _s_or_zero(entrant, partner, k, n, events) for partner in partners
            )
            disks.append(DiskContribution(entrant, slots, s_values))
            increment += slots - sum(s_values)
            in_place.add(entrant)

        below_only = 0
        for element in _initiating(current, previous, k):
            below = [x for x in current if pos(x, k, N) < pos(element, k, N)]
            below_only += _empty_slots_below(element, current, k, N) - sum(
                _s_or_zero(element, other, k, n, scratch) for other in below
            )
        if increment != below_only:
            disagreements.append((k, increment, below_only))

        if increment < 0:
            raise InconsistencyError(
                f"step {k}: negative increment {increment} for sets "
                f"{collection.as_sorted_lists()}"
            )
        running += increment
        steps.append(DimensionStep(k, running, tuple(disks)))
    return DimensionTrace(tuple(steps), tuple(sorted(events)), tuple(disagreements))


def dim_sp_even_via_correction(collection: IndexCollection) -> int:
    """Even symplectic dimension by the comparison route: the type A count
    over degrees 1..n minus the number of ordered pairs (a1, a2) in I_n
    with a1 <_n a2 and 2n+1-a1 <_n a2."""
    if collection.family is not Family.SP_EVEN:
        raise ValueError(f"expected an sp-even collection, got {collection.family.value!r}")
    _require_valid(collection)
    N = collection.n_ambient
    n = N // 2
    base = dim_type_a(collection)
    last = collection.sets[-1]
    correction = sum(
        1
        for a1 in last
        for a2 in last
        if ordering_less(a1, a2, n, N) and ordering_less(N + 1 - a1, a2, n, N)
    )
    return base - correction


def dim_sp_odd(collection: IndexCollection) -> int:
    """Odd symplectic dimension: empty slots under all initiating elements,
    minus the number of ordered pairs (a, b) in I_n with
    2n+2-b <_n a <_n b (a sits strictly between b's mirror partner and b
    in the n-th order; the self-paired middle value can never be such a b).
    """
    if collection.family is not Family.SP_ODD:
        raise ValueError(f"expected an sp-odd collection, got {collection.family.value!r}")
    _require_valid(collection)
    N = collection.n_ambient
    n = N // 2
    base = dim_type_a(collection)
    if n == 0:
        return base
    last = collection.sets[-1]
    correction = sum(
        1
        for a in last
        for b in last
        if a != b
        and ordering_less(N + 1 - b, a, n, N)
        and ordering_less(a, b, n, N)
    )
    result = base - correction
    if result < 0:
        raise InconsistencyError(
            f"negative dimension {result} for sets {collection.as_sorted_lists()}"
        )
    return result


def to_dellac(collection: IndexCollection) -> DellacConfiguration:
    """Build the symmetric configuration attached to a symplectic or
    orthogonal collection.

    Each initiating element l of I_k drops a point into column k: row l
    when l > k, row N + l otherwise. Every still-empty row i <= n then
    receives a diagonal point (i, i), the left half is reflected through
    the center, and for odd N the middle column picks up the two rows that
    remain (necessarily a mutually symmetric pair). The result is validated
    rather than trusted.
    """
    if collection.family.is_type_a:
        raise ValueError("to_dellac is defined for symplectic/orthogonal collections")
    _require_valid(collection)
    N = collection.n_ambient
    n = N // 2
    placed: list[tuple[int, int]] = []
    taken_rows: set[int] = set()

    def place(column: int, row: int) -> None:
        if row in taken_rows:
            raise InconsistencyError(
                f"row {row} hit twice while building the configuration for "
                f"{collection.as_sorted_lists()}"
            )
        taken_rows.add(row)
        placed.append((column, row))

    for k in range(1, n + 1):
        for element in sorted(initiating_elements(collection, k)):
            place(k, element if element > k else N + element)
    for i in range(1, n + 1):
        if i not in taken_rows:
            place(i, i)

    points = list(placed)
    for point in placed:
        column, row = reflect_point(point, N)
        if row in taken_rows:
            raise InconsistencyError(
                f"reflection collides at row {row} for {collection.as_sorted_lists()}"
            )
        points.append((column, row))
    taken_rows.update(row for _, row in points)

    if N % 2:
        free = sorted(set(range(1, 2 * N + 1)) - taken_rows)
        if len(free) != 2 or free[1] != 2 * N + 1 - free[0]:
            raise InconsistencyError(
                f"middle column rows {free} are not a symmetric pair for "
                f"{collection.as_sorted_lists()}"
            )
        points.extend((n + 1, row) for row in free)

    row_to_col = [0] * (2 * N)
    for column, row in points:
        row_to_col[row - 1] = column
    cfg = DellacConfiguration(N, tuple(row_to_col))
    problems = validate_configuration(cfg)
    if problems or not is_symmetric(cfg):
        raise InconsistencyError(
            f"construction produced an invalid configuration for "
            f"{collection.as_sorted_lists()}: {problems or 'not symmetric'}"
        )
    return cfg


def from_dellac(
    cfg: DellacConfiguration, family: Family | None = None
) -> IndexCollection:
    """Read the collection back off a symmetric configuration: I_k collects
    the labels of rows k+1 .. N+k holding a point in the first k columns,
    where a row above N is labeled by i - N. Inverse of `to_dellac`;
    anything failing the roundtrip is rejected."""
    if not is_symmetric(cfg):
        raise NotSymmetricError("from_dellac requires a symmetric configuration")
    N = cfg.n_cols
    if family is None:
        family = Family.SP_EVEN if N % 2 == 0 else Family.SP_ODD
    if family.is_type_a:
        raise ValueError("from_dellac is defined for symplectic/orthogonal families")
    family.check_size(N)
    n = N // 2
    sets = []
    for k in range(1, n + 1):
        members = set()
        for row in range(k + 1, N + k + 1):
            if cfg.row_to_col[row - 1] <= k:
                members.add(row if row <= N else row - N)
        sets.append(frozenset(members))
    collection = IndexCollection(family, N, tuple(sets))
    problems = validate_collection(collection)
    if problems or to_dellac(collection) != cfg:
        raise ValueError(
            f"configuration {cfg.row_to_col} is not in the bijection image"
        )
    return collection


def dim_orthogonal(collection: IndexCollection) -> int:
    """Orthogonal cell dimension: half the non-mirror-fixed inversions of
    the attached symmetric configuration."""
    if not collection.family.is_orthogonal:
        raise ValueError(
            f"expected an orthogonal collection, got {collection.family.value!r}"
        )
    return inv_prime(to_dellac(collection))
