"""Realizability of digit patterns.

A pattern is feasible when some label assignment produces it. Since the
label alphabet is unbounded, the only possible contradiction is a "different"
digit between two slots that are forced equal by a chain of "same" digits,
so a disjoint-set pass decides it exactly.

Two oracles are kept independent of that pass: an exhaustive assignment
search and a count of connected set partitions of the comparison graph.
"""

from __future__ import annotations

import functools
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from sympy.utilities.iterables import multiset_partitions

from .model import (
    ComparisonSchema,
    GuardExceeded,
    LabelAssignment,
    check_aligned,
)

BRUTEFORCE_MAX_VARIABLES = 10
PARTITION_MAX_VARIABLES = 12


class DisjointSet:
    """Union-find over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> int:
        x, y = self.find(x), self.find(y)
        if x == y:
            return x
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return x


@dataclass(frozen=True)
class ConstraintGraph:
    """Label slots as vertices, one equal/different edge per schema digit."""

    vertex_count: int
    equal: tuple[tuple[int, int], ...]
    different: tuple[tuple[int, int], ...]

    @classmethod
    def from_pattern(cls, p: Sequence[int], s: ComparisonSchema) -> "ConstraintGraph":
        check_aligned(p, s)
        eq = tuple(e for e, bit in zip(s.edges, p) if not bit)
        ne = tuple(e for e, bit in zip(s.edges, p) if bit)
        return cls(s.shape.variable_count, eq, ne)

    def components(self) -> DisjointSet:
        ds = DisjointSet(self.vertex_count)
        for x, y in self.equal:
            ds.union(x, y)
        return ds


def _feasible_bits(bits: Sequence[int], edges, nvars: int) -> bool:
    # Hot path for enumeration; same logic as ConstraintGraph without the allocation.
    parent = list(range(nvars))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (x, y), bit in zip(edges, bits):
        if not bit:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    for (x, y), bit in zip(edges, bits):
        if bit and find(x) == find(y):
            return False
    return True


def is_feasible(p: Sequence[int], s: ComparisonSchema) -> bool:
    check_aligned(p, s)
    return _feasible_bits(p, s.edges, s.shape.variable_count)


def witness(p: Sequence[int], s: ComparisonSchema) -> LabelAssignment | None:
    """A realizing assignment using one fresh natural number per component,
    numbered in order of first appearance; None when infeasible."""
    g = ConstraintGraph.from_pattern(p, s)
    ds = g.components()
    if any(ds.find(x) == ds.find(y) for x, y in g.different):
        return None
    fresh: dict[int, int] = {}
    values = [fresh.setdefault(ds.find(v), len(fresh)) for v in range(g.vertex_count)]
    return LabelAssignment.from_variables(s.shape, values)


def restricted_growth_strings(length: int):
    """All label vectors whose first occurrences appear as 0, 1, 2, ...

    Every assignment over any alphabet is a relabeling of exactly one of
    these, and relabeling never changes a pattern.
    """
    if length == 0:
        yield ()
        return
    v = [0] * length

    # hi is one past the largest label used so far
    def rec(i, hi):
        if i == length:
            yield tuple(v)
            return
        for x in range(hi + 1):
            v[i] = x
            yield from rec(i + 1, max(hi, x + 1))

    yield from rec(1, 1)


@functools.lru_cache(maxsize=32)
def _bruteforce_realizable(s: ComparisonSchema) -> frozenset:
    edges = s.edges
    return frozenset(
        tuple(int(v[x] != v[y]) for x, y in edges)
        for v in restricted_growth_strings(s.shape.variable_count)
    )


def is_feasible_oracle_bruteforce(p: Sequence[int], s: ComparisonSchema) -> bool:
    """Exhaustive search over all assignments of the shape's label slots.

    Searches the V^V assignments over an alphabet of size V modulo alphabet
    relabeling, which preserves every digit. The realizable set is cached
    per schema.
    """
    check_aligned(p, s)
    nvars = s.shape.variable_count
    if nvars > BRUTEFORCE_MAX_VARIABLES:
        raise GuardExceeded(
            f"brute force needs <= {BRUTEFORCE_MAX_VARIABLES} label variables, {s.shape} has {nvars}"
        )
    return tuple(p) in _bruteforce_realizable(s)


def _block_connected(block, adjacency) -> bool:
    members = set(block)
    seen = {block[0]}
    stack = [block[0]]
    while stack:
        x = stack.pop()
        for y in adjacency[x]:
            if y in members and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(members)


def feasible_count_oracle_partitions(s: ComparisonSchema) -> int:
    """Number of set partitions of the label slots whose blocks are all
    connected in the comparison graph. These biject with feasible patterns."""
    nvars = s.shape.variable_count
    if nvars > PARTITION_MAX_VARIABLES:
        raise GuardExceeded(
            f"partition oracle needs <= {PARTITION_MAX_VARIABLES} label variables, {s.shape} has {nvars}"
        )
    adjacency = defaultdict(set)
    for x, y in s.edges:
        adjacency[x].add(y)
        adjacency[y].add(x)
    return sum(
        all(_block_connected(block, adjacency) for block in partition)
        for partition in multiset_partitions(list(range(nvars)))
    )

