"""JSON, CSV and DOT renderings of universes, reports and transcripts."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from dataclasses import dataclass
from typing import Iterable

from .enumeration import CountReport, UniverseClass
from .feasibility import witness
from .model import (
    FROM_PAPER,
    TO_PAPER,
    ComparisonSchema,
    DigitPattern,
    LabelAssignment,
    ShapeError,
    SystemShape,
    paper_order_convert,
    pattern_from_assignment,
    schema_digits,
)

PAPER, INTERNAL = "paper", "internal"


class InfeasiblePattern(ValueError):
    pass


def is_two_one(shape: SystemShape) -> bool:
    return (shape.m, len(shape.observable)) == (2, 1)


def default_order(shape: SystemShape) -> str:
    return PAPER if is_two_one(shape) else INTERNAL


def to_internal(p, shape: SystemShape, order: str) -> DigitPattern:
    p = DigitPattern(p)
    if order == PAPER:
        return paper_order_convert(p, shape, FROM_PAPER)
    if order != INTERNAL:
        raise ValueError(f"unknown digit order {order!r}")
    return p


def from_internal(p, shape: SystemShape, order: str) -> DigitPattern:
    if order == PAPER:
        return paper_order_convert(p, shape, TO_PAPER)
    if order != INTERNAL:
        raise ValueError(f"unknown digit order {order!r}")
    return DigitPattern(p)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class UniverseDocument:
    """A universe given either by its labels or by a digit pattern.

    ``bits`` are stored in the stated ``order`` exactly as written.
    """

    shape: SystemShape
    labels: LabelAssignment | None = None
    bits: DigitPattern | None = None
    order: str = INTERNAL
    class_name: str | None = None

    def __post_init__(self):
        if (self.labels is None) == (self.bits is None):
            raise ValueError("a universe document holds exactly one of labels or pattern")
        if self.bits is not None:
            if len(self.bits) != self.shape.digit_count:
                raise ShapeError(
                    f"pattern has {len(self.bits)} digits, {self.shape} needs {self.shape.digit_count}"
                )
            if self.order == PAPER and not is_two_one(self.shape):
                raise ShapeError("paper digit order is only valid for 2+1")
            if self.order not in (PAPER, INTERNAL):
                raise ValueError(f"unknown digit order {self.order!r}")
        if self.labels is not None and self.labels.shape != self.shape:
            raise ShapeError("label shape does not match document shape")

    def pattern(self) -> DigitPattern:
        """Internal-order pattern, derived from labels when necessary."""
        if self.bits is not None:
            return to_internal(self.bits, self.shape, self.order)
        return pattern_from_assignment(self.labels, schema_digits(self.shape))

    def as_dict(self) -> dict:
        doc: dict = {
            "shape": {"m": self.shape.m, "n": self.shape.n, "observable": list(self.shape.observable)}
        }
        if self.labels is not None:
            doc["labels"] = {
                "sensation": [list(row) for row in self.labels.sens],
                "communication": list(self.labels.comm),
            }
        else:
            doc["pattern"] = {"bits": str(self.bits), "order": self.order}
        if self.class_name is not None:
            doc["class"] = self.class_name
        return doc

    def dumps(self) -> str:
        return dumps(self.as_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> "UniverseDocument":
        sh = doc["shape"]
        shape = SystemShape(int(sh["m"]), int(sh["n"]), sh.get("observable"))
        labels = bits = None
        order = INTERNAL
        if "labels" in doc:
            lab = doc["labels"]
            labels = LabelAssignment(shape, lab["sensation"], lab["communication"])
        if "pattern" in doc:
            bits = DigitPattern(doc["pattern"]["bits"])
            order = doc["pattern"].get("order", default_order(shape))
        return cls(shape, labels, bits, order, doc.get("class"))

    @classmethod
    def loads(cls, text: str) -> "UniverseDocument":
        return cls.from_dict(json.loads(text))


def report_dict(r: CountReport) -> dict:
    return dataclasses.asdict(r)


def class_record(c: UniverseClass, shape: SystemShape, order: str) -> dict:
    return {
        "canonical": str(from_internal(c.canonical, shape, order)),
        "order": order,
        "orbit_size": c.orbit_size,
        "feasible": c.feasible,
        "name": c.name,
    }


def write_csv(rows: Iterable[dict], fields: list[str], out) -> None:
    w = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow(row)


def csv_text(rows: Iterable[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    write_csv(rows, fields, buf)
    return buf.getvalue()


def export_dot(item, schema: ComparisonSchema | None = None) -> str:
    """DOT digraph of a universe.

    ``item`` is a LabelAssignment, or an internal-order pattern together
    with its schema; a pattern is drawn through its witness assignment.
    """
    if isinstance(item, LabelAssignment):
        a = item
    else:
        if schema is None:
            raise ValueError("exporting a pattern needs its schema")
        a = witness(item, schema)
        if a is None:
            raise InfeasiblePattern(f"pattern {DigitPattern(item)} is not realizable")
    shape = a.shape
    lines = ["digraph universe {"]
    for s in range(shape.m):
        lines.append(f"  S{s + 1} [shape=circle];")
    for o in range(shape.n):
        style = "" if o in shape.observable else ", style=dashed"
        lines.append(f"  O{o + 1} [shape=box{style}];")
    for s in range(shape.m):
        for o in shape.observable:
            lines.append(f'  S{s + 1} -> O{o + 1} [label="{a.sensation(s, o)}"];')
    for s in range(shape.m):
        for t in range(shape.m):
            if s != t:
                lines.append(f'  S{s + 1} -> S{t + 1} [label="{a.comm[s]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
