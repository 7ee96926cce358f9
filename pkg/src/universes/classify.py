"""Reality taxonomy for 2+1 universes and projections of larger systems."""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .feasibility import is_feasible
from .model import (
    FROM_PAPER,
    ComparisonSchema,
    LabelAssignment,
    ShapeError,
    SystemShape,
    paper_order_convert,
    pattern_from_assignment,
    schema_digits,
)
from .symmetry import canonical_form


class RealityClass(str, enum.Enum):
    METAPHYSICAL_REALIST = "metaphysical_realist"
    MAYA = "maya"
    SYNAESTHETIC = "synaesthetic"
    PERSONAL_UNIVERSE = "personal_universe"
    UNCLASSIFIED = "unclassified"

    def __str__(self):
        return self.value


SUPER_REAL = "super_real"
DOGMATIC_VARIANT = "dogmatic_variant"

TWO_ONE = SystemShape(2, 1)
_SCHEMA_2_1 = schema_digits(TWO_ONE)

# Only these six patterns (display order) are given a name; every other
# feasible class stays unclassified.
NAMED_PATTERNS = {
    "0000": RealityClass.METAPHYSICAL_REALIST,
    "1111": RealityClass.MAYA,
    "0111": RealityClass.SYNAESTHETIC,
    "1101": RealityClass.PERSONAL_UNIVERSE,
    "0101": RealityClass.PERSONAL_UNIVERSE,
    "1001": RealityClass.PERSONAL_UNIVERSE,
}

_BY_CANONICAL = {
    canonical_form(paper_order_convert(lit, TWO_ONE, FROM_PAPER), _SCHEMA_2_1): cls
    for lit, cls in NAMED_PATTERNS.items()
}


def classify_2_1(
    p: Sequence[int] | str, order: str = "paper", shape: SystemShape | None = None
) -> RealityClass:
    if shape is not None and (shape.m, len(shape.observable)) != (2, 1):
        raise ShapeError(f"classification is defined on 2+1 systems, not {shape}")
    if isinstance(p, str):
        p = [int(c) for c in p]
    if len(p) != 4:
        raise ShapeError(f"2+1 patterns have 4 digits, got {len(p)}")
    if order == "paper":
        p = paper_order_convert(p, TWO_ONE, FROM_PAPER)
    elif order != "internal":
        raise ValueError(f"unknown digit order {order!r}")
    if not is_feasible(p, _SCHEMA_2_1):
        raise ValueError(f"pattern {''.join(map(str, p))} is not realizable")
    return _BY_CANONICAL.get(canonical_form(p, _SCHEMA_2_1), RealityClass.UNCLASSIFIED)


def reality_name(p: Sequence[int], s: ComparisonSchema) -> str | None:
    """Class name for an internal-order 2+1 pattern, None for other shapes."""
    if (s.shape.m, len(s.shape.observable)) != (2, 1):
        return None
    return classify_2_1(p, order="internal").value


@dataclass(frozen=True)
class ClassificationSummary:
    counts: dict[RealityClass, int]
    tags: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "classes": {str(k): v for k, v in sorted(self.counts.items(), key=lambda kv: kv[0].value)},
            "tags": list(self.tags),
        }


def project_2_1(a: LabelAssignment, pair: tuple[int, int], obj: int) -> LabelAssignment:
    """Restrict an assignment to two subjects and one observable object."""
    i, j = pair
    return LabelAssignment(
        TWO_ONE,
        ((a.sensation(i, obj),), (a.sensation(j, obj),)),
        (a.comm[i], a.comm[j]),
    )


def classify_system(a: LabelAssignment, dogmatic: bool = False) -> ClassificationSummary:
    """Multiset of 2+1 classes over every subject pair and observable object.

    Tags ``super_real`` when some object is unobservable. With
    ``dogmatic=True`` (subjects and objects not assumed to exist) a
    realist projection is additionally tagged ``dogmatic_variant``.
    """
    shape = a.shape
    counts: Counter = Counter()
    for pair in itertools.combinations(range(shape.m), 2):
        for o in shape.observable:
            sub = project_2_1(a, pair, o)
            counts[classify_2_1(pattern_from_assignment(sub, _SCHEMA_2_1), order="internal")] += 1
    tags = []
    if shape.super_real:
        tags.append(SUPER_REAL)
    if dogmatic and counts[RealityClass.METAPHYSICAL_REALIST]:
        tags.append(DOGMATIC_VARIANT)
    return ClassificationSummary(dict(counts), tuple(tags))
