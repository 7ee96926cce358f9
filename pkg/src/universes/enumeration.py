"""Pattern enumeration, isomorphism classes and the counting audit."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from . import feasibility
from .feasibility import _feasible_bits, feasible_count_oracle_partitions, is_feasible
from .model import (
    DEFAULT_CAP,
    ComparisonSchema,
    DigitPattern,
    GuardExceeded,
    SystemShape,
    schema_digits,
)
from .symmetry import MAX_SUBJECTS, count_classes_burnside, orbit


@dataclass(frozen=True)
class UniverseClass:
    canonical: DigitPattern
    orbit_size: int
    feasible: bool = True
    name: str | None = None


def _check_cap(s: ComparisonSchema, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if len(s) > cap:
        raise GuardExceeded(f"cap exceeded: {s.shape} has {len(s)} digits, cap is {cap}")


def _bits(value: int, width: int) -> DigitPattern:
    return DigitPattern((value >> (width - 1 - i)) & 1 for i in range(width))


def enumerate_patterns(s: ComparisonSchema, cap: int | None = None) -> Iterator[DigitPattern]:
    """All 2**d patterns in lexicographic order."""
    _check_cap(s, cap)
    return (DigitPattern(bits) for bits in itertools.product((0, 1), repeat=len(s)))


def _feasible_in_range(s: ComparisonSchema, lo: int, hi: int) -> list[int]:
    d, edges, nvars = len(s), s.edges, s.shape.variable_count
    out = []
    for value in range(lo, hi):
        bits = [(value >> (d - 1 - i)) & 1 for i in range(d)]
        if _feasible_bits(bits, edges, nvars):
            out.append(value)
    return out


def enumerate_feasible(
    s: ComparisonSchema, cap: int | None = None, workers: int | None = None
) -> Iterator[DigitPattern]:
    """Feasible patterns in lexicographic order.

    With ``workers > 1`` the pattern space is split into contiguous ranges
    checked in separate processes; results are concatenated in range order
    so the output is identical to the sequential run.
    """
    _check_cap(s, cap)
    if not workers or workers < 2:
        return (p for p in enumerate_patterns(s, cap) if is_feasible(p, s))
    total = 1 << len(s)
    step = max(1, -(-total // (workers * 4)))
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(_feasible_in_range, *zip(*((s, lo, hi) for lo, hi in bounds))))
    return (_bits(v, len(s)) for chunk in chunks for v in chunk)


def enumerate_classes(
    s: ComparisonSchema, cap: int | None = None, workers: int | None = None
) -> list[UniverseClass]:
    """One entry per isomorphism class of feasible patterns, sorted by
    canonical pattern. 2+1 classes carry their reality class name."""
    from .classify import reality_name

    seen: set[DigitPattern] = set()
    classes = []
    for p in enumerate_feasible(s, cap, workers):
        if p in seen:
            continue
        members = orbit(p, s)
        seen.update(members)
        canon = min(members)
        classes.append(UniverseClass(canon, len(members), True, reality_name(canon, s)))
    classes.sort(key=lambda c: c.canonical)
    return classes


def theorem1_prediction(m: int, n: int) -> int:
    """Universe count claimed by the closed formula 2**(m*m*n) - m*m*n."""
    d = m * m * n
    return 2**d - d


def corollary1_prediction(m: int, n: int) -> int:
    """Claimed count of non-isomorphic universes, 2**(m*m*n) - m*m*n - 3nm(m-1)/2."""
    # m(m-1) is even, so the subtracted term is an exact integer
    return theorem1_prediction(m, n) - 3 * n * m * (m - 1) // 2


@dataclass
class CountReport:
    m: int
    n: int
    observable: list[int]
    digit_count: int
    total_patterns: int
    theorem1_predicted: int
    corollary1_predicted: int
    feasible_observed: int | None = None
    classes_observed: int | None = None
    partition_oracle: int | None = None
    burnside_check: int | None = None
    bruteforce_agrees: bool | None = None
    theorem1_match: bool | None = None
    corollary1_match: bool | None = None
    partition_match: bool | None = None
    burnside_match: bool | None = None
    skipped: list[str] = field(default_factory=list)

    @property
    def oracles_consistent(self) -> bool:
        return (
            self.partition_match is not False
            and self.burnside_match is not False
            and self.bruteforce_agrees is not False
        )


def verify_counts(
    shape: SystemShape, cap: int | None = None, workers: int | None = None
) -> CountReport:
    """Measure feasible and class counts and compare them with the closed
    formulas. Mismatches are recorded, never raised; sections over their
    size guard are listed in ``skipped``."""
    s = schema_digits(shape)
    k = len(shape.observable)
    report = CountReport(
        m=shape.m,
        n=shape.n,
        observable=list(shape.observable),
        digit_count=len(s),
        total_patterns=2 ** len(s),
        theorem1_predicted=theorem1_prediction(shape.m, k),
        corollary1_predicted=corollary1_prediction(shape.m, k),
    )
    cap = DEFAULT_CAP if cap is None else cap

    feasible = None
    if len(s) <= cap and shape.m <= MAX_SUBJECTS:
        feasible = list(enumerate_feasible(s, cap, workers))
        report.feasible_observed = len(feasible)
        report.theorem1_match = report.feasible_observed == report.theorem1_predicted
        report.classes_observed = len(enumerate_classes(s, cap, workers))
        report.corollary1_match = report.classes_observed == report.corollary1_predicted
        report.burnside_check = count_classes_burnside(s, cap)
        report.burnside_match = report.burnside_check == report.classes_observed
    else:
        report.skipped += ["enumeration", "burnside"]

    if shape.variable_count <= feasibility.PARTITION_MAX_VARIABLES:
        report.partition_oracle = feasible_count_oracle_partitions(s)
        if feasible is not None:
            report.partition_match = report.partition_oracle == report.feasible_observed
    else:
        report.skipped.append("partition_oracle")

    if shape.variable_count <= feasibility.BRUTEFORCE_MAX_VARIABLES and feasible is not None:
        realizable = feasibility._bruteforce_realizable(s)
        report.bruteforce_agrees = set(map(tuple, feasible)) == realizable
    else:
        report.skipped.append("bruteforce")
    return report
