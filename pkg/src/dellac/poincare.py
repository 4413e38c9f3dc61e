"""Poincaré polynomials of the five flag families, by two independent routes.

The statistic route sums q^stat over configurations: plain inversions over
the full family for type A, the mirror-class count `inv_tilde` over the
symmetric family for the symplectic cases, and the non-fixed half-count
`inv_prime` for the orthogonal cases. The cells route sums q^dimension
over index collections using the matching dimension algorithm. The two
routes must produce identical polynomials; all coefficients are exact
integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from .configurations import (
    enumerate_dellac,
    enumerate_symmetric,
    inv,
    inv_prime,
    inv_tilde,
)
from .flags import (
    Family,
    dim_orthogonal,
    dim_sp_even,
    dim_sp_odd,
    dim_type_a,
    enumerate_collections,
)

METHODS = ("statistic", "cells")

_SEQUENCES = {
    "genocchi_normalized": (1, 2, 7, 38, 295),
    "r": (1, 2, 10, 98, 1594),
    "l": (1, 3, 21, 267, 5349),
}
_SEQUENCE_ALIASES = {"genocchi": "genocchi_normalized"}


@dataclass(frozen=True)
class Polynomial:
    """Exact nonnegative integer coefficients, index = degree of q."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"coefficients must be nonnegative integers, got {c!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_histogram(cls, counts: Mapping[int, int]) -> "Polynomial":
        if not counts:
            return cls(())
        top = max(counts)
        if min(counts) < 0:
            raise ValueError("negative degree in histogram")
        return cls(tuple(counts.get(d, 0) for d in range(top + 1)))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_coefficient(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def evaluate(self, x: int = 1) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __str__(self) -> str:
        return format_polynomial(self)


def format_polynomial(poly: Polynomial) -> str:
    """Render in descending powers with coefficient 1 suppressed:
    'q^4 + 3q^3 + 3q^2 + 2q + 1'."""
    if poly.is_zero:
        return "0"
    terms = []
    for degree in range(poly.degree, -1, -1):
        c = poly.coeffs[degree]
        if c == 0:
            continue
        if degree == 0:
            terms.append(str(c))
            continue
        q = "q" if degree == 1 else f"q^{degree}"
        terms.append(q if c == 1 else f"{c}{q}")
    return " + ".join(terms)


def is_unimodal(poly: Polynomial) -> bool:
    """True iff the coefficients weakly rise and then weakly fall."""
    coeffs = poly.coeffs
    i = 0
    while i + 1 < len(coeffs) and coeffs[i] <= coeffs[i + 1]:
        i += 1
    return all(coeffs[j] >= coeffs[j + 1] for j in range(i, len(coeffs) - 1))


def expected_dimension(family: Family, n_ambient: int) -> int:
    """Top cell dimension of the family at ambient size N."""
    family.check_size(n_ambient)
    n = n_ambient // 2
    if family is Family.TYPE_A:
        return n_ambient * (n_ambient - 1) // 2
    if family is Family.SP_EVEN:
        return n * n
    if family is Family.SP_ODD:
        return n * (n + 1)
    return (n_ambient // 2) * ((n_ambient - 1) // 2)


def reference_sequence(name: str) -> list[int]:
    """Embedded count prefixes: the full-family counts, the even symmetric
    counts, and the odd symmetric counts."""
    key = _SEQUENCE_ALIASES.get(name, name)
    if key not in _SEQUENCES:
        known = sorted(_SEQUENCES) + sorted(_SEQUENCE_ALIASES)
        raise ValueError(f"unknown sequence {name!r}; known: {', '.join(known)}")
    return list(_SEQUENCES[key])


def statistic_histogram(family: Family, n_ambient: int) -> Counter[int]:
    """Degree histogram of the family's statistic over its configurations."""
    family.check_size(n_ambient)
    if family is Family.TYPE_A:
        return Counter(inv(cfg) for cfg in enumerate_dellac(n_ambient))
    statistic = inv_tilde if family.is_symplectic else inv_prime
    return Counter(statistic(cfg) for cfg in enumerate_symmetric(n_ambient))


def cells_histogram(family: Family, n_ambient: int) -> Counter[int]:
    """Degree histogram of cell dimensions over the family's collections."""
    family.check_size(n_ambient)
    if family is Family.TYPE_A:
        dimension = dim_type_a
    elif family is Family.SP_EVEN:
        dimension = lambda col: dim_sp_even(col).dimension
    elif family is Family.SP_ODD:
        dimension = dim_sp_odd
    else:
        dimension = dim_orthogonal
    return Counter(dimension(col) for col in enumerate_collections(family, n_ambient))


def poincare_polynomial(
    family: Family, n_ambient: int, method: str = "statistic"
) -> Polynomial:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    histogram = (
        statistic_histogram(family, n_ambient)
        if method == "statistic"
        else cells_histogram(family, n_ambient)
    )
    return Polynomial.from_histogram(histogram)


def euler_characteristic(family: Family, n_ambient: int) -> int:
    """Value of the Poincaré polynomial at 1: the configuration count."""
    return sum(statistic_histogram(family, n_ambient).values())
