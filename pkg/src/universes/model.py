"""Domain types for m+n subject/object systems.

A system has ``m`` subjects and ``n`` objects. Every subject senses every
observable object (one label per subject/object edge) and carries a single
communication label shared by all of its outgoing subject edges. A universe
is summarised by its digit pattern: one bit per compared pair of labels,
0 when the labels are equal and 1 when they differ.

Subjects and objects are indexed from 0. Digit order within each observable
object is: sensation/sensation pairs, sensation/own-communication, then
communication/communication pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

# Largest digit count any full enumeration will attempt (2**24 patterns).
DEFAULT_CAP = 24


class ShapeError(ValueError):
    """Raised when inputs disagree about the shape of a system."""


class GuardExceeded(ValueError):
    """Raised when a computation would exceed its configured size cap."""


@dataclass(frozen=True)
class SystemShape:
    m: int
    n: int
    observable: tuple[int, ...] = None  # type: ignore[assignment]

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ShapeError(f"need at least one subject, got m={self.m!r}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ShapeError(f"object count must be non-negative, got n={self.n!r}")
        if self.observable is None:
            obs = tuple(range(self.n))
        else:
            obs = tuple(sorted(set(self.observable)))
            bad = [o for o in obs if not 0 <= o < self.n]
            if bad:
                raise ShapeError(f"observable objects {bad} outside 0..{self.n - 1}")
        object.__setattr__(self, "observable", obs)

    @property
    def digit_count(self) -> int:
        return self.m * self.m * len(self.observable)

    @property
    def variable_count(self) -> int:
        """Number of label slots: one per sensation edge plus one per subject."""
        return self.m * len(self.observable) + self.m

    @property
    def super_real(self) -> bool:
        return len(self.observable) < self.n

    def sens_var(self, a: int, o: int) -> int:
        return a * len(self.observable) + self.observable.index(o)

    def comm_var(self, a: int) -> int:
        return self.m * len(self.observable) + a

    def __str__(self):
        s = f"{self.m}+{self.n}"
        if self.super_real:
            s += f" (observable {list(self.observable)})"
        return s


def make_system(m: int, n: int, observable: Iterable[int] | None = None) -> SystemShape:
    return SystemShape(m, n, None if observable is None else tuple(observable))


@dataclass(frozen=True)
class LabelAssignment:
    """Ground-truth labels of one universe.

    ``sens[a][k]`` is subject ``a``'s label for the ``k``-th observable
    object; ``comm[a]`` is the single label on all of subject ``a``'s edges
    to other subjects. Objects never carry outgoing labels.
    """

    shape: SystemShape
    sens: tuple[tuple[int, ...], ...]
    comm: tuple[int, ...]

    def __post_init__(self):
        sens = tuple(tuple(int(x) for x in row) for row in self.sens)
        comm = tuple(int(x) for x in self.comm)
        k = len(self.shape.observable)
        if len(sens) != self.shape.m or any(len(row) != k for row in sens):
            raise ShapeError(f"sensation labels must be {self.shape.m}x{k}")
        if len(comm) != self.shape.m:
            raise ShapeError(f"need {self.shape.m} communication labels, got {len(comm)}")
        if any(x < 0 for x in comm) or any(x < 0 for row in sens for x in row):
            raise ValueError("labels are natural numbers")
        object.__setattr__(self, "sens", sens)
        object.__setattr__(self, "comm", comm)

    @classmethod
    def from_variables(cls, shape: SystemShape, values: Sequence[int]) -> "LabelAssignment":
        """Build from a flat vector indexed like ``shape.sens_var``/``comm_var``."""
        if len(values) != shape.variable_count:
            raise ShapeError(f"need {shape.variable_count} values, got {len(values)}")
        k = len(shape.observable)
        sens = tuple(tuple(values[a * k:(a + 1) * k]) for a in range(shape.m))
        return cls(shape, sens, tuple(values[shape.m * k:]))

    def variables(self) -> tuple[int, ...]:
        return tuple(itertools.chain(*self.sens, self.comm))

    def sensation(self, a: int, o: int) -> int:
        return self.sens[a][self.shape.observable.index(o)]

    def relabel(self, mapping: Mapping[int, int]) -> "LabelAssignment":
        return LabelAssignment(
            self.shape,
            tuple(tuple(mapping[x] for x in row) for row in self.sens),
            tuple(mapping[x] for x in self.comm),
        )


SS, SC, CC = "SS", "SC", "CC"


@dataclass(frozen=True)
class DigitDescriptor:
    """One compared pair of labels. ``b`` is None for SC digits."""

    kind: str
    a: int
    b: int | None
    obj: int

    def slots(self, shape: SystemShape) -> tuple[int, int]:
        if self.kind == SS:
            return shape.sens_var(self.a, self.obj), shape.sens_var(self.b, self.obj)
        if self.kind == SC:
            return shape.sens_var(self.a, self.obj), shape.comm_var(self.a)
        return shape.comm_var(self.a), shape.comm_var(self.b)

    def permuted(self, perm: Sequence[int]) -> "DigitDescriptor":
        """Descriptor with subjects renamed through ``perm``; pairs stay sorted."""
        if self.kind == SC:
            return DigitDescriptor(SC, perm[self.a], None, self.obj)
        a, b = sorted((perm[self.a], perm[self.b]))
        return DigitDescriptor(self.kind, a, b, self.obj)

    def __str__(self):
        if self.kind == SC:
            return f"SC({self.a},{self.obj})"
        return f"{self.kind}({self.a},{self.b},{self.obj})"


@dataclass(frozen=True)
class ComparisonSchema:
    shape: SystemShape
    digits: tuple[DigitDescriptor, ...] = field(repr=False)
    edges: tuple[tuple[int, int], ...] = field(repr=False, compare=False)

    def __len__(self):
        return len(self.digits)

    def index(self, d: DigitDescriptor) -> int:
        return self._positions()[d]

    def _positions(self) -> dict:
        pos = self.__dict__.get("_pos")
        if pos is None:
            pos = {d: i for i, d in enumerate(self.digits)}
            object.__setattr__(self, "_pos", pos)
        return pos


def schema_digits(shape: SystemShape) -> ComparisonSchema:
    pairs = list(itertools.combinations(range(shape.m), 2))
    digits = []
    for o in shape.observable:
        digits += [DigitDescriptor(SS, a, b, o) for a, b in pairs]
        digits += [DigitDescriptor(SC, a, None, o) for a in range(shape.m)]
        digits += [DigitDescriptor(CC, a, b, o) for a, b in pairs]
    return ComparisonSchema(shape, tuple(digits), tuple(d.slots(shape) for d in digits))


class DigitPattern(tuple):
    """Bit tuple aligned to a schema; 0 means the compared labels are equal."""

    __slots__ = ()

    def __new__(cls, bits: Iterable[int] | str = ()):
        if isinstance(bits, str):
            if not set(bits) <= {"0", "1"}:
                raise ValueError(f"not a bit string: {bits!r}")
            bits = [int(c) for c in bits]
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"digits must be 0 or 1: {bits}")
        return super().__new__(cls, bits)

    def __str__(self):
        return "".join(map(str, self))

    def __repr__(self):
        return f"DigitPattern('{self}')"


def check_aligned(p: Sequence[int], s: ComparisonSchema) -> None:
    if len(p) != len(s):
        raise ShapeError(f"pattern has {len(p)} digits, schema for {s.shape} has {len(s)}")


def pattern_from_assignment(a: LabelAssignment, s: ComparisonSchema) -> DigitPattern:
    if a.shape != s.shape:
        raise ShapeError(f"assignment shape {a.shape} != schema shape {s.shape}")
    v = a.variables()
    return DigitPattern(int(v[x] != v[y]) for x, y in s.edges)


TO_PAPER = "to_paper"
FROM_PAPER = "from_paper"


def paper_order_convert(p: Sequence[int], shape: SystemShape, direction: str = TO_PAPER) -> DigitPattern:
    """Convert a 2+1 pattern between internal order (SS, SC1, SC2, CC) and
    the display order (SS, SC1, CC, SC2). The swap is its own inverse."""
    if direction not in (TO_PAPER, FROM_PAPER):
        raise ValueError(f"unknown direction {direction!r}")
    if (shape.m, len(shape.observable)) != (2, 1):
        raise ShapeError(f"paper digit order is only defined for 2+1, not {shape}")
    if len(p) != 4:
        raise ShapeError(f"2+1 patterns have 4 digits, got {len(p)}")
    return DigitPattern((p[0], p[1], p[3], p[2]))
