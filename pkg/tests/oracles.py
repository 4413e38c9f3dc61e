"""Independent brute-force oracles the tests check production code against.

Everything here favors obviousness over speed: explicit orbit sets instead
of the classification arithmetic, full-family filtering instead of the
bottom-half symmetric search, raw subset products instead of chain
backtracking.
"""

from itertools import combinations, product

from dellac.configurations import (
    DellacConfiguration,
    central_reflection,
    enumerate_dellac,
    reflect_point,
)


def point_scan_inversions(cfg):
    """Inversions recomputed from the unordered point set."""
    pts = cfg.points()
    out = set()
    for p, q in combinations(pts, 2):
        (j1, i1), (j2, i2) = p, q
        if j1 < j2 and i1 > i2:
            out.add((p, q))
        elif j2 < j1 and i2 > i1:
            out.add((q, p))
    return out


def filtered_symmetric(n_cols):
    """Symmetric family obtained by filtering the full enumeration."""
    return [
        cfg
        for cfg in enumerate_dellac(n_cols)
        if central_reflection(cfg) == cfg
    ]


def orbit_classes(cfg):
    """Equivalence classes of inversions under the reflection, as explicit
    orbits of unordered point pairs."""
    n = cfg.n_cols
    pairs = {frozenset(pair) for pair in point_scan_inversions(cfg)}
    classes = []
    seen = set()
    for pair in pairs:
        if pair in seen:
            continue
        mirror = frozenset(reflect_point(p, n) for p in pair)
        orbit = {pair, mirror}
        assert mirror in pairs, "reflection must map inversions to inversions"
        seen |= orbit
        classes.append(orbit)
    return classes


def orbit_inv_tilde(cfg):
    return len(orbit_classes(cfg))


def orbit_inv_prime(cfg):
    return sum(1 for orbit in orbit_classes(cfg) if len(orbit) == 2)


def brute_collections(n_ambient, chain_length, isotropy=False):
    """All chains (I_1, ..., I_m) of k-subsets of {1..N} with
    I_k <= I_{k+1} + {k+1}, by filtering the raw product of subsets.

    With `isotropy`, additionally reject I_m containing a pair
    {a, N+1-a} of distinct values.
    """
    ground = range(1, n_ambient + 1)
    levels = [
        [frozenset(c) for c in combinations(ground, k)]
        for k in range(1, chain_length + 1)
    ]
    out = []
    for chain in product(*levels):
        if any(
            not chain[k - 1] <= (chain[k] | {k + 1})
            for k in range(1, chain_length)
        ):
            continue
        if isotropy and chain and any(
            n_ambient + 1 - a in chain[-1] and n_ambient + 1 - a != a
            for a in chain[-1]
        ):
            continue
        out.append(chain)
    if chain_length == 0:
        out.append(())
    return out


def literal_case_split_dims(sets, n_ambient):
    """The even symplectic recurrence transcribed case by case, with the
    excluded pairs a + b = N + 1 contributing zero.

    Case one (k not carried in I_{k-1}): the single new element j adds its
    empty-slot count below, minus s(j, i, k) over all of I_{k-1}. Case two
    (k in I_{k-1}): the two new elements j_1 >_k j_2 add both slot counts
    below (ignoring I_{k-1} minus k), minus one, minus s(j_1, j_2, k),
    minus s against every carried element.
    """
    from dellac.flags import ordering_position, s_statistic

    n = n_ambient // 2

    def pos(x, k):
        return ordering_position(x, k, n_ambient)

    def s0(a, b, k):
        return 0 if a + b == n_ambient + 1 else s_statistic(a, b, k, n)

    def slots_below(x, excluded, k):
        return sum(
            1
            for y in range(1, n_ambient + 1)
            if y not in excluded and pos(y, k) < pos(x, k)
        )

    d = 0
    dims = []
    for k in range(1, n + 1):
        current = sets[k - 1]
        previous = sets[k - 2] if k >= 2 else frozenset()
        if k not in previous:
            (j,) = set(current) - set(previous)
            d += slots_below(j, previous, k) - sum(s0(j, i, k) for i in previous)
        else:
            carried = set(previous) - {k}
            j2, j1 = sorted(set(current) - carried, key=lambda x: pos(x, k))
            d += (
                slots_below(j2, carried, k)
                + slots_below(j1, carried, k)
                - 1
                - s0(j1, j2, k)
                - sum(s0(j1, i, k) + s0(j2, i, k) for i in carried)
            )
        dims.append(d)
    return tuple(dims)


def naive_unimodal(seq):
    """True iff some split point makes the sequence rise then fall."""
    seq = list(seq)
    if not seq:
        return True
    for t in range(len(seq)):
        head, tail = seq[: t + 1], seq[t:]
        if all(a <= b for a, b in zip(head, head[1:])) and all(
            a >= b for a, b in zip(tail, tail[1:])
        ):
            return True
    return False


# The seven size-3 configurations exactly as drawn in the source figure,
# left to right, with their inversion counts.
DC3_FIGURE = [
    ((1, 1, 2, 2, 3, 3), 0),
    ((1, 1, 2, 3, 2, 3), 1),
    ((1, 2, 1, 2, 3, 3), 1),
    ((1, 1, 3, 2, 2, 3), 2),
    ((1, 2, 1, 3, 2, 3), 2),
    ((1, 2, 2, 1, 3, 3), 2),
    ((1, 2, 3, 1, 2, 3), 3),
]

# The ten symmetric size-4 configurations in figure order, with
# (inv_tilde, inv_prime) read off the colored segments.
SDC4_FIGURE = [
    ((1, 1, 2, 2, 3, 3, 4, 4), 0, 0),
    ((1, 1, 2, 3, 2, 3, 4, 4), 1, 0),
    ((1, 1, 3, 2, 3, 2, 4, 4), 2, 1),
    ((1, 1, 3, 3, 2, 2, 4, 4), 3, 1),
    ((1, 2, 1, 2, 3, 4, 3, 4), 1, 1),
    ((1, 2, 1, 3, 2, 4, 3, 4), 2, 1),
    ((1, 2, 2, 1, 4, 3, 3, 4), 2, 2),
    ((1, 2, 3, 1, 4, 2, 3, 4), 3, 2),
    ((1, 2, 2, 4, 1, 3, 3, 4), 3, 2),
    ((1, 2, 3, 4, 1, 2, 3, 4), 4, 2),
]


def config(rows):
    return DellacConfiguration(len(rows) // 2, tuple(rows))
