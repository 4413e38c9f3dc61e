"""Cross-check suite: every computed quantity against an independent route.

Each check group compares two ways of arriving at the same numbers
(enumeration filter vs direct search, dimension recurrences vs inversion
statistics, computed polynomials vs embedded published tables) and reports
one pass/fail line with a counterexample payload on failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .configurations import (
    central_reflection,
    classify_inversions,
    enumerate_dellac,
    enumerate_symmetric,
    inv,
    inv_prime,
    inv_tilde,
    validate_configuration,
)
from .flags import (
    Family,
    IndexCollection,
    dim_sp_even,
    dim_sp_even_via_correction,
    dim_sp_odd,
    enumerate_collections,
    from_dellac,
    to_dellac,
)
from .poincare import (
    Polynomial,
    euler_characteristic,
    expected_dimension,
    format_polynomial,
    is_unimodal,
    poincare_polynomial,
    reference_sequence,
)
from .serialize import collection_to_dict, config_to_dict

# Appendix coefficient tables (ascending degree), the golden values for
# check `golden-polynomials`.
GOLDEN_POLYNOMIALS: dict[tuple[Family, int], tuple[int, ...]] = {
    (Family.TYPE_A, 1): (1,),
    (Family.TYPE_A, 2): (1, 1),
    (Family.TYPE_A, 3): (1, 2, 3, 1),
    (Family.TYPE_A, 4): (1, 3, 7, 10, 10, 6, 1),
    (Family.SP_ODD, 1): (1,),
    (Family.SP_ODD, 3): (1, 1, 1),
    (Family.SP_ODD, 5): (1, 2, 4, 5, 5, 3, 1),
    (Family.SP_ODD, 7): (1, 3, 8, 15, 25, 35, 43, 45, 40, 29, 16, 6, 1),
    (Family.SP_EVEN, 2): (1, 1),
    (Family.SP_EVEN, 4): (1, 2, 3, 3, 1),
    (Family.SP_EVEN, 6): (1, 3, 7, 12, 17, 20, 18, 13, 6, 1),
    (Family.SP_EVEN, 8): (
        1, 4, 12, 27, 52, 87, 130, 175, 211, 229, 220, 186, 134, 79, 36, 10, 1,
    ),
    (Family.SO_ODD, 1): (1,),
    (Family.SO_ODD, 3): (1, 2),
    (Family.SO_ODD, 5): (1, 3, 6, 7, 4),
    (Family.SO_ODD, 7): (1, 4, 11, 23, 38, 52, 56, 47, 27, 8),
    (Family.SO_EVEN, 2): (2,),
    (Family.SO_EVEN, 4): (2, 4, 4),
    (Family.SO_EVEN, 6): (2, 6, 14, 22, 26, 20, 8),
    (Family.SO_EVEN, 8): (2, 8, 24, 54, 102, 164, 228, 272, 276, 230, 150, 68, 16),
}

WORKED_EXAMPLE = IndexCollection(
    Family.SP_EVEN, 8, ({3}, {3, 7}, {1, 4, 7}, {1, 4, 6, 7})
)
WORKED_EXAMPLE_DIMS = (1, 4, 7, 9)
WORKED_EXAMPLE_POINTS = frozenset(
    {
        (1, 3), (2, 7), (3, 4), (3, 9), (4, 6), (4, 12), (1, 1), (2, 2),
        (8, 14), (7, 10), (6, 13), (6, 8), (5, 11), (5, 5), (8, 16), (7, 15),
    }
)

SDC4_INV_TILDE_DISTRIBUTION = (1, 2, 3, 3, 1)
SDC4_INV_PRIME_VALUES = (0, 0, 1, 1, 1, 1, 2, 2, 2, 2)

MAX_TYPE_A = 6  # both routes stay desk-scale through DC_6
MAX_FULL_FAMILY = 7  # largest size whose full family is enumerated


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    counterexample: dict | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.detail}"
        if self.counterexample is not None:
            text += f" counterexample={self.counterexample}"
        return text


@dataclass
class VerificationReport:
    max_even: int
    max_odd: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def exit_status(self) -> int:
        return 0 if self.ok else 1

    def summary_line(self) -> str:
        passed = sum(1 for c in self.checks if c.passed)
        return (
            f"SUMMARY: {passed}/{len(self.checks)} checks passed "
            f"(max_even={self.max_even}, max_odd={self.max_odd})"
        )

    def to_dict(self) -> dict:
        return {
            "max_even": self.max_even,
            "max_odd": self.max_odd,
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                    "counterexample": c.counterexample,
                }
                for c in self.checks
            ],
        }


class _Memo:
    """Shared enumerations so expensive families are walked once per run."""

    def __init__(self) -> None:
        self._full: dict[int, list] = {}
        self._symmetric: dict[int, list] = {}
        self._collections: dict[tuple[Family, int], list] = {}

    def full(self, n: int) -> list:
        if n not in self._full:
            self._full[n] = list(enumerate_dellac(n))
        return self._full[n]

    def symmetric(self, n: int) -> list:
        if n not in self._symmetric:
            self._symmetric[n] = list(enumerate_symmetric(n))
        return self._symmetric[n]

    def collections(self, family: Family, n: int) -> list:
        key = (family, n)
        if key not in self._collections:
            self._collections[key] = list(enumerate_collections(family, n))
        return self._collections[key]


def _sizes(report: VerificationReport, *, parity: str) -> list[int]:
    if parity == "even":
        return list(range(2, report.max_even + 1, 2))
    if parity == "odd":
        return list(range(1, report.max_odd + 1, 2))
    return sorted(
        set(range(2, report.max_even + 1, 2)) | set(range(1, report.max_odd + 1, 2))
    )


def _check_counts_full_family(report, memo) -> CheckResult:
    want = reference_sequence("genocchi_normalized")
    for n, expected in enumerate(want, 1):
        got = len(memo.full(n))
        if got != expected:
            return CheckResult(
                "counts-full-family", False,
                f"|DC_{n}| = {got}, expected {expected}",
            )
    return CheckResult(
        "counts-full-family", True,
        f"|DC_N| = {','.join(map(str, want))} for N=1..{len(want)}",
    )


def _check_counts_symmetric(report, memo) -> CheckResult:
    r, l = reference_sequence("r"), reference_sequence("l")
    details = []
    for n in _sizes(report, parity="even"):
        index = n // 2
        if index >= len(r):
            details.append(f"|SDC_{n}|={len(memo.symmetric(n))} (no reference)")
            continue
        got = len(memo.symmetric(n))
        if got != r[index]:
            return CheckResult(
                "counts-symmetric", False, f"|SDC_{n}| = {got}, expected {r[index]}"
            )
    for n in _sizes(report, parity="odd"):
        index = n // 2
        if index >= len(l):
            details.append(f"|SDC_{n}|={len(memo.symmetric(n))} (no reference)")
            continue
        got = len(memo.symmetric(n))
        if got != l[index]:
            return CheckResult(
                "counts-symmetric", False, f"|SDC_{n}| = {got}, expected {l[index]}"
            )
    detail = "even and odd symmetric counts match the embedded prefixes"
    if details:
        detail += "; " + ", ".join(details)
    return CheckResult("counts-symmetric", True, detail)


def _check_symmetric_is_filter(report, memo) -> CheckResult:
    top = min(MAX_FULL_FAMILY, max(report.max_even, report.max_odd))
    for n in range(1, top + 1):
        filtered = [c for c in memo.full(n) if central_reflection(c) == c]
        if filtered != memo.symmetric(n):
            return CheckResult(
                "symmetric-equals-filter", False,
                f"N={n}: direct symmetric search differs from the reflection filter",
            )
    return CheckResult(
        "symmetric-equals-filter", True,
        f"direct search equals the reflection filter for N <= {top}",
    )


def _check_reflection(report, memo) -> CheckResult:
    top = min(MAX_FULL_FAMILY, max(report.max_even, report.max_odd))
    for n in range(1, top + 1):
        for cfg in memo.full(n):
            mirrored = central_reflection(cfg)
            if validate_configuration(mirrored):
                return CheckResult(
                    "reflection-involution", False,
                    f"N={n}: reflection broke the band",
                    config_to_dict(cfg),
                )
            if central_reflection(mirrored) != cfg:
                return CheckResult(
                    "reflection-involution", False,
                    f"N={n}: reflection is not an involution",
                    config_to_dict(cfg),
                )
    return CheckResult(
        "reflection-involution", True,
        f"R preserves validity and R(R(D)) = D over every D, N <= {top}",
    )


def _check_statistic_identity(report, memo) -> CheckResult:
    sizes = _sizes(report, parity="both")
    total = 0
    for n in sizes:
        for cfg in memo.symmetric(n):
            cls = classify_inversions(cfg)
            if cls.paired % 2 or cls.total != cls.self_symmetric + cls.paired:
                return CheckResult(
                    "statistic-identity", False,
                    f"N={n}: classification bookkeeping broke",
                    config_to_dict(cfg),
                )
            if inv(cfg) != inv_tilde(cfg) + inv_prime(cfg):
                return CheckResult(
                    "statistic-identity", False,
                    f"N={n}: inv != inv~ + inv'",
                    config_to_dict(cfg),
                )
            total += 1
    return CheckResult(
        "statistic-identity", True,
        f"inv = inv~ + inv' and paired counts even over {total} symmetric configurations",
    )


def _check_collection_counts(report, memo) -> CheckResult:
    parts = []
    for n in _sizes(report, parity="even"):
        got = len(memo.collections(Family.SP_EVEN, n))
        if got != len(memo.symmetric(n)):
            return CheckResult(
                "collection-counts", False,
                f"N={n}: {got} even collections vs {len(memo.symmetric(n))} configurations",
            )
    for n in _sizes(report, parity="odd"):
        got = len(memo.collections(Family.SP_ODD, n))
        if got != len(memo.symmetric(n)):
            return CheckResult(
                "collection-counts", False,
                f"N={n}: {got} odd collections vs {len(memo.symmetric(n))} configurations",
            )
    parts.append("symplectic/orthogonal collection counts equal |SDC_N|")
    for n in range(1, MAX_TYPE_A + 1):
        got = len(memo.collections(Family.TYPE_A, n))
        want = len(memo.full(n)) if n <= MAX_FULL_FAMILY else None
        if want is not None and got != want:
            return CheckResult(
                "collection-counts", False,
                f"N={n}: {got} type A collections vs {want} configurations",
            )
    parts.append(f"type A counts equal |DC_N| for N <= {MAX_TYPE_A}")
    return CheckResult("collection-counts", True, "; ".join(parts))


def _check_bijection_roundtrip(report, memo) -> CheckResult:
    top = min(MAX_FULL_FAMILY, max(report.max_even, report.max_odd))
    for n in range(1, top + 1):
        family = Family.SP_EVEN if n % 2 == 0 else Family.SP_ODD
        images = set()
        for col in memo.collections(family, n):
            cfg = to_dellac(col)
            if from_dellac(cfg, family) != col:
                return CheckResult(
                    "bijection-roundtrip", False,
                    f"N={n}: from_dellac(to_dellac(I)) != I",
                    collection_to_dict(col),
                )
            images.add(cfg)
        if images != set(memo.symmetric(n)):
            return CheckResult(
                "bijection-roundtrip", False,
                f"N={n}: image of to_dellac is not exactly the symmetric family",
            )
        for cfg in memo.symmetric(n):
            if to_dellac(from_dellac(cfg, family)) != cfg:
                return CheckResult(
                    "bijection-roundtrip", False,
                    f"N={n}: to_dellac(from_dellac(D)) != D",
                    config_to_dict(cfg),
                )
    return CheckResult(
        "bijection-roundtrip", True,
        f"both roundtrips are identities and the image is exactly SDC_N, N <= {top}",
    )


def _check_even_dimension_routes(report, memo) -> CheckResult:
    excluded = 0
    disagreeing_forms = 0
    checked = 0
    for n in _sizes(report, parity="even"):
        for col in memo.collections(Family.SP_EVEN, n):
            trace = dim_sp_even(col)
            if trace.dims != tuple(sorted(trace.dims)):
                return CheckResult(
                    "even-dimension-routes", False,
                    f"N={n}: trace not nondecreasing",
                    collection_to_dict(col),
                )
            by_correction = dim_sp_even_via_correction(col)
            by_statistic = inv_tilde(to_dellac(col))
            if not trace.dimension == by_correction == by_statistic:
                return CheckResult(
                    "even-dimension-routes", False,
                    f"N={n}: inductive {trace.dimension}, correction {by_correction}, "
                    f"statistic {by_statistic}",
                    collection_to_dict(col),
                )
            excluded += len(trace.excluded_pairs)
            disagreeing_forms += bool(trace.form_disagreements)
            checked += 1
    return CheckResult(
        "even-dimension-routes", True,
        f"inductive = correction = statistic on {checked} collections; "
        f"findings: below-only disk form differs on {disagreeing_forms} collections, "
        f"{excluded} correction lookups at a+b=2n+1 (treated as 0)",
    )


def _check_odd_dimension_route(report, memo) -> CheckResult:
    checked = 0
    for n in _sizes(report, parity="odd"):
        for col in memo.collections(Family.SP_ODD, n):
            want = inv_tilde(to_dellac(col))
            got = dim_sp_odd(col)
            if got != want:
                return CheckResult(
                    "odd-dimension-route", False,
                    f"N={n}: slot count {got} vs statistic {want}",
                    collection_to_dict(col),
                )
            checked += 1
    return CheckResult(
        "odd-dimension-route", True,
        f"slot-count route equals the statistic route on {checked} collections",
    )


def _check_golden_polynomials(report, memo) -> CheckResult:
    for (family, n), coeffs in GOLDEN_POLYNOMIALS.items():
        want = Polynomial(coeffs)
        for method in ("statistic", "cells"):
            got = poincare_polynomial(family, n, method)
            if got != want:
                return CheckResult(
                    "golden-polynomials", False,
                    f"{family.value} N={n} via {method}: {format_polynomial(got)} != "
                    f"{format_polynomial(want)}",
                )
    return CheckResult(
        "golden-polynomials", True,
        f"all {len(GOLDEN_POLYNOMIALS)} published polynomials reproduced by both methods",
    )


def _computable_polynomials(report) -> list[tuple[Family, int]]:
    cases = [(Family.TYPE_A, n) for n in range(1, MAX_TYPE_A + 1)]
    for family in (Family.SP_EVEN, Family.SO_EVEN):
        cases.extend((family, n) for n in _sizes(report, parity="even"))
    for family in (Family.SP_ODD, Family.SO_ODD):
        cases.extend((family, n) for n in _sizes(report, parity="odd"))
    return cases


def _check_polynomial_structure(report, memo) -> CheckResult:
    notes = []
    for family, n in _computable_polynomials(report):
        poly = poincare_polynomial(family, n, "statistic")
        if poly.degree != expected_dimension(family, n):
            return CheckResult(
                "polynomial-structure", False,
                f"{family.value} N={n}: degree {poly.degree} != expected "
                f"{expected_dimension(family, n)}",
            )
        count = (
            len(memo.full(n)) if family.is_type_a else len(memo.symmetric(n))
        )
        if poly.evaluate(1) != count or euler_characteristic(family, n) != count:
            return CheckResult(
                "polynomial-structure", False,
                f"{family.value} N={n}: P(1) != configuration count {count}",
            )
        if family.is_orthogonal:
            leading_target = 2 ** (n // 2)
            if n <= 8 and poly.leading_coefficient != leading_target:
                return CheckResult(
                    "polynomial-structure", False,
                    f"{family.value} N={n}: leading coefficient "
                    f"{poly.leading_coefficient} != 2^(N//2) = {leading_target}",
                )
            if n > 8:
                notes.append(
                    f"{family.value} N={n} leading={poly.leading_coefficient} "
                    f"(2^(N//2)={leading_target}, reported only)"
                )
            constant_target = 2 if (n % 2 == 0 and n >= 2) else 1
            if poly.constant_coefficient != constant_target:
                return CheckResult(
                    "polynomial-structure", False,
                    f"{family.value} N={n}: constant {poly.constant_coefficient} "
                    f"!= {constant_target}",
                )
        elif poly.constant_coefficient != 1:
            return CheckResult(
                "polynomial-structure", False,
                f"{family.value} N={n}: constant {poly.constant_coefficient} != 1",
            )
    detail = "degrees, Euler characteristics, leading and constant coefficients all check"
    if notes:
        detail += "; " + "; ".join(notes)
    return CheckResult("polynomial-structure", True, detail)


def _check_unimodality(report, memo) -> CheckResult:
    for family, n in _computable_polynomials(report):
        poly = poincare_polynomial(family, n, "statistic")
        if not is_unimodal(poly):
            return CheckResult(
                "unimodality", False,
                f"{family.value} N={n} is NOT unimodal: {format_polynomial(poly)}",
            )
    return CheckResult(
        "unimodality", True,
        "every computed polynomial is unimodal (conjecture holds in range)",
    )


def _check_worked_example(report, memo) -> CheckResult:
    trace = dim_sp_even(WORKED_EXAMPLE)
    if trace.dims != WORKED_EXAMPLE_DIMS:
        return CheckResult(
            "worked-example", False, f"trace {trace.dims} != {WORKED_EXAMPLE_DIMS}"
        )
    image = to_dellac(WORKED_EXAMPLE)
    if set(image.points()) != WORKED_EXAMPLE_POINTS:
        return CheckResult("worked-example", False, "image point set differs")
    if inv_tilde(image) != 9 or dim_sp_even_via_correction(WORKED_EXAMPLE) != 9:
        return CheckResult("worked-example", False, "dimension routes disagree at the example")
    return CheckResult(
        "worked-example", True,
        "trace (1,4,7,9), image point set, and all routes give 9",
    )


def _check_sdc4_tables(report, memo) -> CheckResult:
    configs = memo.symmetric(4)
    tilde = [0] * 5
    for cfg in configs:
        tilde[inv_tilde(cfg)] += 1
    if tuple(tilde) != SDC4_INV_TILDE_DISTRIBUTION:
        return CheckResult(
            "sdc4-tables", False,
            f"inv~ distribution {tuple(tilde)} != {SDC4_INV_TILDE_DISTRIBUTION}",
        )
    primes = tuple(sorted(inv_prime(cfg) for cfg in configs))
    if primes != SDC4_INV_PRIME_VALUES:
        return CheckResult(
            "sdc4-tables", False,
            f"inv' multiset {primes} != {SDC4_INV_PRIME_VALUES}",
        )
    return CheckResult(
        "sdc4-tables", True,
        "inv~ distribution (1,2,3,3,1) and inv' values {0,0,1,1,1,1,2,2,2,2}",
    )


_CHECKS = (
    _check_counts_full_family,
    _check_counts_symmetric,
    _check_symmetric_is_filter,
    _check_reflection,
    _check_statistic_identity,
    _check_collection_counts,
    _check_bijection_roundtrip,
    _check_even_dimension_routes,
    _check_odd_dimension_route,
    _check_golden_polynomials,
    _check_polynomial_structure,
    _check_unimodality,
    _check_worked_example,
    _check_sdc4_tables,
)


def run_verify(max_even: int = 8, max_odd: int = 9) -> VerificationReport:
    """Run every check group; a failing group carries its counterexample."""
    if max_even < 2 or max_even % 2:
        raise ValueError(f"max_even must be an even size >= 2, got {max_even}")
    if max_odd < 1 or max_odd % 2 == 0:
        raise ValueError(f"max_odd must be an odd size >= 1, got {max_odd}")
    report = VerificationReport(max_even, max_odd)
    memo = _Memo()
    for check in _CHECKS:
        try:
            result = check(report, memo)
        except Exception as exc:  # a crash is a failure, not an abort
            result = CheckResult(
                check.__name__.removeprefix("_check_").replace("_", "-"),
                False,
                f"raised {type(exc).__name__}: {exc}",
            )
        report.checks.append(result)
    return report
