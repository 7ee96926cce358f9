"""Subject-permutation isomorphism on digit patterns.

Two universes are isomorphic when renaming the subjects turns one pattern
into the other. Objects are never permuted.
"""

from __future__ import annotations

import functools
import itertools
import math
from typing import Iterable, Sequence

from .feasibility import is_feasible
from .model import DEFAULT_CAP, ComparisonSchema, DigitPattern, GuardExceeded, ShapeError, check_aligned

MAX_SUBJECTS = 8


class SubjectPermutation(tuple):
    """A bijection on ``0..m-1``; ``perm[a]`` is the image of subject ``a``."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, m: int) -> "SubjectPermutation":
        return cls(range(m))

    def __call__(self, a: int) -> int:
        return self[a]

    def compose(self, other: "SubjectPermutation") -> "SubjectPermutation":
        """``self ∘ other``: apply ``other`` first."""
        return SubjectPermutation(self[other[a]] for a in range(len(self)))

    def inverse(self) -> "SubjectPermutation":
        inv = [0] * len(self)
        for a, b in enumerate(self):
            inv[b] = a
        return SubjectPermutation(inv)


def all_permutations(m: int):
    return [SubjectPermutation(p) for p in itertools.permutations(range(m))]


def _guard(s: ComparisonSchema):
    if s.shape.m > MAX_SUBJECTS:
        raise GuardExceeded(f"group enumeration capped at m <= {MAX_SUBJECTS}, got m={s.shape.m}")


@functools.lru_cache(maxsize=256)
def _position_map(s: ComparisonSchema, perm: SubjectPermutation) -> tuple[int, ...]:
    # result[i] = p[source[i]]
    return tuple(s.index(d.permuted(perm)) for d in s.digits)


def apply_subject_permutation(
    p: Sequence[int], perm: Sequence[int], s: ComparisonSchema
) -> DigitPattern:
    """Read each digit of ``p`` at the renamed descriptor.

    The digit for SS(a,b,o) becomes p's digit for SS(perm(a),perm(b),o),
    and likewise for SC and CC. As a consequence,
    ``apply(apply(p, pi), sigma) == apply(p, pi.compose(sigma))``.
    """
    check_aligned(p, s)
    if len(perm) != s.shape.m:
        raise ShapeError(f"permutation on {len(perm)} subjects, shape has {s.shape.m}")
    source = _position_map(s, SubjectPermutation(perm))
    return DigitPattern(p[j] for j in source)


def orbit(p: Sequence[int], s: ComparisonSchema) -> frozenset[DigitPattern]:
    check_aligned(p, s)
    _guard(s)
    return frozenset(
        DigitPattern(p[j] for j in _position_map(s, perm)) for perm in all_permutations(s.shape.m)
    )


def canonical_form(p: Sequence[int], s: ComparisonSchema) -> DigitPattern:
    """Lexicographically smallest member of the orbit, in internal digit order."""
    return min(orbit(p, s))


def _cycles(source: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(source)
    cycles = []
    for start in range(len(source)):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = source[j]
        cycles.append(cyc)
    return cycles


def fixed_feasible_count(perm: SubjectPermutation, s: ComparisonSchema) -> int:
    """Feasible patterns left unchanged by ``perm``.

    A fixed pattern is constant on every cycle of the induced digit
    permutation, so only 2**cycles candidates need checking.
    """
    cycles = _cycles(_position_map(s, perm))
    count = 0
    bits = [0] * len(s)
    for values in itertools.product((0, 1), repeat=len(cycles)):
        for cyc, v in zip(cycles, values):
            for j in cyc:
                bits[j] = v
        count += is_feasible(bits, s)
    return count


def count_classes_burnside(s: ComparisonSchema, cap: int | None = None) -> int:
    """Isomorphism classes of feasible patterns, as the group average of
    fixed feasible patterns."""
    cap = DEFAULT_CAP if cap is None else cap
    if len(s) > cap:
        raise GuardExceeded(f"cap exceeded: {len(s)} digits > {cap}")
    _guard(s)
    m = s.shape.m
    total = sum(fixed_feasible_count(perm, s) for perm in all_permutations(m))
    classes, rem = divmod(total, math.factorial(m))
    assert rem == 0, "fixed-point total not divisible by group order"
    return classes
