"""Exact dichromatic number and r-colorings by backtracking.

An r-coloring partitions the vertices into r parts, each inducing an
acyclic subdigraph (digons count as directed cycles).  The solver assigns
vertices in descending (out+in)-degree order and colors in ascending index,
which prunes digon-dense instances fastest; acyclicity of a part is
re-checked incrementally with a bitmask reachability closure instead of a
full recomputation.  Exact search only, intended for n <= 16.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .digraph import Digraph, induced_subdigraph, is_weakly_connected
from .spectral import le_via_degrees


@dataclass(frozen=True)
class AcyclicPartition:
    """Disjoint exhaustive vertex parts, each inducing an acyclic digraph."""

    parts: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.parts)

    def to_json(self) -> str:
        return json.dumps([list(p) for p in self.parts])


def _creates_cycle(rows, cols, part_mask: int, v: int) -> bool:
    """Would adding v to the part close a directed cycle inside it?

    The part is acyclic, so any new cycle passes through v: it exists iff
    some in-neighbor of v inside the part is reachable from an out-neighbor
    of v inside the part.
    """
    targets = cols[v] & part_mask
    if not targets:
        return False
    frontier = rows[v] & part_mask
    reach = 0
    while frontier:
        if frontier & targets:
            return True
        reach |= frontier
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= rows[low.bit_length() - 1]
            m ^= low
        frontier = nxt & part_mask & ~reach
    return False


def find_acyclic_partition(g: Digraph, r: int) -> AcyclicPartition | None:
    """First valid r-coloring in backtracking order, or None.

    Deterministic for a fixed digraph.  Absence of an r-coloring is a value,
    not an error.
    """
    if r < 1:
        raise ValueError(f"part count must be >= 1, got {r}")
    n = g.n
    rows, cols = g.rows, g.cols
    order = sorted(range(n), key=lambda v: (-(rows[v].bit_count() + cols[v].bit_count()), v))
    masks = [0] * r
    assigned = [0] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        limit = r
        for c in range(r):
            if masks[c] == 0:
                limit = c + 1
                break
        for c in range(limit):
            if not _creates_cycle(rows, cols, masks[c], v):
                masks[c] |= 1 << v
                assigned[v] = c
                if place(i + 1):
                    return True
                masks[c] &= ~(1 << v)
        return False

    if not place(0):
        return None
    used = [c for c in range(r) if masks[c]]
    parts = tuple(
        tuple(v for v in range(n) if assigned[v] == c and masks[c] >> v & 1)
        for c in used
    )
    # pad with empty parts removed; r-coloring with fewer nonempty parts is
    # still an r-coloring, but we report only the nonempty parts
    return AcyclicPartition(parts)


def dichromatic_number(g: Digraph) -> int:
    for r in range(1, g.n + 1):
        if find_acyclic_partition(g, r) is not None:
            return r
    raise AssertionError("unreachable: singleton parts always color")


def is_critical_vertex(g: Digraph, v: int) -> bool:
    """True iff deleting v lowers the dichromatic number."""
    if g.n < 2:
        raise ValueError("vertex deletion needs n >= 2")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    rest = [u for u in range(g.n) if u != v]
    return dichromatic_number(induced_subdigraph(g, rest)) < dichromatic_number(g)


def critical_core(g: Digraph) -> tuple[Digraph, tuple[int, ...]]:
    """An induced subdigraph with the same dichromatic number in which every
    vertex is critical, plus the original labels of its vertices.

    Vertices whose removal preserves the dichromatic number are deleted
    greedily in ascending label order until none remains.
    """
    target = dichromatic_number(g)
    keep = list(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in list(keep):
            if len(keep) == 1:
                break
            rest = [u for u in keep if u != v]
            if dichromatic_number(induced_subdigraph(g, rest)) == target:
                keep = rest
                changed = True
    return induced_subdigraph(g, keep), tuple(keep)


def arc_reversal_descent(g: Digraph, core: Iterable[int]) -> Digraph:
    """Reverse arcs into out-degree-0 vertices outside the core until none
    remains.  Never increases the Laplacian energy.

    While some vertex v outside the core has out-degree 0, the
    lexicographically smallest arc (w, v) into such a vertex is reversed.
    Lex choice alone can revisit a state through energy-neutral reversals,
    so already-seen arc sets are skipped; if every candidate reversal leads
    to a seen state the descent stops where it is.
    """
    core_mask = 0
    for v in core:
        if not 0 <= v < g.n:
            raise ValueError(f"core vertex {v} out of range")
        core_mask |= 1 << v
    if core_mask == 0:
        raise ValueError("core must be nonempty")
    core_vertices = [v for v in range(g.n) if core_mask >> v & 1]
    if dichromatic_number(induced_subdigraph(g, core_vertices)) != dichromatic_number(g):
        raise ValueError("core does not preserve the dichromatic number")

    start_le = le_via_degrees(g)
    rows = list(g.rows)
    n = g.n
    seen = {tuple(rows)}
    while True:
        zero_out = [
            v for v in range(n)
            if not core_mask >> v & 1 and rows[v] == 0
        ]
        if not zero_out:
            break
        candidates = sorted(
            (w, v)
            for v in zero_out
            for w in range(n)
            if rows[w] >> v & 1
        )
        advanced = False
        for w, v in candidates:
            rows[w] &= ~(1 << v)
            rows[v] |= 1 << w
            state = tuple(rows)
            if state not in seen:
                seen.add(state)
                advanced = True
                break
            rows[v] &= ~(1 << w)
            rows[w] |= 1 << v
        if not advanced:
            break
    result = Digraph.from_rows(rows)
    assert le_via_degrees(result) <= start_le
    return result
