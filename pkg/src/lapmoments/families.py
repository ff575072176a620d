"""Constructors and recognizers for the extremal digraph families.

Families: in-trees (path, star, seeded random shapes), transitive
tournaments, directed and bidirected cycles, bidirected complete graphs,
join digraphs over nonincreasing compositions, and the minimal-energy
digraphs per dichromatic class (a cycle or bidirected complete core with
pendant in-trees).

Join digraphs lay their parts out in contiguous label blocks, in
composition order, so exports are reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .digraph import Digraph, induced_subdigraph, is_weakly_connected, join

IN_PATH = "inpath"
IN_STAR = "instar"
TOURNAMENT = "tt"
RAND_PREFIX = "rand:"

DIRECTED_CYCLE = "directed_cycle"
BIDIRECTED_CYCLE = "bidirected_cycle"
BIDIRECTED_COMPLETE = "bidirected_complete"


@dataclass(frozen=True)
class Composition:
    """Nonincreasing positive part sizes with their sum."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("composition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be nonincreasing: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)


def compositions(n: int, r: int) -> Iterator[Composition]:
    """All nonincreasing compositions of n into exactly r positive parts,
    in descending lexicographic order."""
    if r < 1 or r > n:
        return

    def rec(remaining: int, parts: list[int], cap: int, slots: int):
        if slots == 1:
            if remaining <= cap:
                yield Composition(tuple(parts + [remaining]))
            return
        lo = -(-remaining // slots)  # ceil: keep nonincreasing feasible
        for first in range(min(cap, remaining - (slots - 1)), lo - 1, -1):
            yield from rec(remaining - first, parts + [first], first, slots - 1)

    yield from rec(n, [], n, r)


@dataclass(frozen=True)
class JoinSpec:
    """Composition plus a part kind (in-tree shape or tournament) per part."""

    composition: Composition
    kinds: tuple[str, ...]

    def __post_init__(self):
        if len(self.kinds) != self.composition.r:
            raise ValueError("one kind per part required")
        for kind in self.kinds:
            if kind not in (IN_PATH, IN_STAR, TOURNAMENT) and not kind.startswith(RAND_PREFIX):
                raise ValueError(f"unknown part kind {kind!r}")

    def to_text(self) -> str:
        return ",".join(f"{p}:{k}" for p, k in zip(self.composition.parts, self.kinds))


def parse_join_spec(text: str) -> JoinSpec:
    """Parse "n1:kind,n2:kind,..." with kinds tt|inpath|instar|rand:<seed>."""
    parts = []
    kinds = []
    for item in text.split(","):
        item = item.strip()
        size, _, kind = item.partition(":")
        try:
            parts.append(int(size))
        except ValueError:
            raise ValueError(f"bad part size in {item!r}") from None
        if not kind:
            raise ValueError(f"missing kind in {item!r}")
        kinds.append(kind)
    return JoinSpec(Composition(tuple(parts)), tuple(kinds))


def in_tree(m: int, shape: str = IN_PATH) -> Digraph:
    """Directed tree with all out-degrees <= 1; the single out-degree-0
    vertex (the root) carries the largest label.

    Shapes: "inpath" (path oriented toward the root), "instar" (all leaves
    point at the root), "rand:<seed>" (each non-root vertex picks a
    uniformly random later-indexed parent).
    """
    if m < 1:
        raise ValueError(f"in-tree size must be >= 1, got {m}")
    if m == 1:
        return Digraph(1)
    if shape == IN_PATH:
        return Digraph(m, [(i, i + 1) for i in range(m - 1)])
    if shape == IN_STAR:
        return Digraph(m, [(i, m - 1) for i in range(m - 1)])
    if shape.startswith(RAND_PREFIX):
        seed = int(shape[len(RAND_PREFIX):])
        rng = random.Random(seed)
        return Digraph(m, [(i, rng.randint(i + 1, m - 1)) for i in range(m - 1)])
    raise ValueError(f"unknown in-tree shape {shape!r}")


def transitive_tournament(m: int) -> Digraph:
    """Arcs (i, j) for all i < j; out-degree sequence (m-1, ..., 1, 0)."""
    if m < 1:
        raise ValueError(f"tournament size must be >= 1, got {m}")
    return Digraph(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def standard_family(kind: str, m: int) -> Digraph:
    """Directed cycle (m >= 2), bidirected cycle (m >= 3), or bidirected
    complete graph (m >= 1) on m vertices."""
    if kind == DIRECTED_CYCLE:
        if m < 2:
            raise ValueError(f"directed cycle needs m >= 2, got {m}")
        return Digraph(m, [(i, (i + 1) % m) for i in range(m)])
    if kind == BIDIRECTED_CYCLE:
        if m < 3:
            raise ValueError(f"bidirected cycle needs m >= 3, got {m}")
        arcs = []
        for i in range(m):
            j = (i + 1) % m
            arcs += [(i, j), (j, i)]
        return Digraph(m, arcs)
    if kind == BIDIRECTED_COMPLETE:
        if m < 1:
            raise ValueError(f"bidirected complete graph needs m >= 1, got {m}")
        return Digraph(m, [(i, j) for i in range(m) for j in range(m) if i != j])
    raise ValueError(f"unknown family kind {kind!r}")


def _build_part(size: int, kind: str) -> Digraph:
    if kind == TOURNAMENT:
        return transitive_tournament(size)
    return in_tree(size, kind)


def join_digraph(spec: JoinSpec) -> Digraph:
    """Iterated join of the constructed parts, in composition order."""
    parts = [_build_part(s, k) for s, k in zip(spec.composition.parts, spec.kinds)]
    g = parts[0]
    for p in parts[1:]:
        g = join(g, p)
    return g


def theorem210_minimizer(
    n: int,
    r: int,
    trees: Sequence[tuple[int, str, int]] | None = None,
) -> Digraph:
    """A minimal-Laplacian-energy digraph with dichromatic number r.

    The core is a directed cycle (r = 2) or a bidirected complete graph on
    r vertices (r >= 3); the remaining vertices form pendant in-trees whose
    roots each send exactly one arc into the core.  ``trees`` lists
    (size, shape, core_vertex) triples; by default the leftover vertices
    form a single in-path attached to core vertex 0.
    """
    if r < 2:
        raise ValueError(f"dichromatic target must be >= 2, got {r}")
    if r == 2:
        if n < 2:
            raise ValueError(f"r=2 needs n >= 2, got n={n}")
    elif n < r:
        raise ValueError(f"r={r} needs n >= r, got n={n}")

    core_size = n if (r == 2 and trees is None) else (r if r >= 3 else None)
    if trees is None:
        spare = 0 if r == 2 else n - r
        trees = [(spare, IN_PATH, 0)] if spare else []
    trees = list(trees)
    tree_total = sum(size for size, _, _ in trees)
    if r == 2:
        core_size = n - tree_total
        if trees and core_size < 3:
            raise ValueError(
                f"r=2 with pendant trees needs a cycle core of length >= 3; "
                f"n={n} leaves {core_size}"
            )
        if core_size < 2:
            raise ValueError(f"cycle core of length {core_size} is infeasible")
        core = standard_family(DIRECTED_CYCLE, core_size)
    else:
        core_size = r
        if tree_total != n - r:
            raise ValueError(
                f"tree sizes sum to {tree_total}, need n - r = {n - r}"
            )
        core = standard_family(BIDIRECTED_COMPLETE, r)

    arcs = list(core.arcs())
    offset = core_size
    for size, shape, target in trees:
        if size < 1:
            raise ValueError(f"tree size must be >= 1, got {size}")
        if not 0 <= target < core_size:
            raise ValueError(f"core vertex {target} out of range")
        t = in_tree(size, shape)
        arcs.extend((offset + u, offset + v) for u, v in t.arcs())
        root = offset + size - 1  # in_tree places the root at the top label
        arcs.append((root, target))
        offset += size
    if offset != n:
        raise ValueError(f"tree sizes sum to {offset - core_size}, need {n - core_size}")
    return Digraph(n, arcs)


# -- recognizers ---------------------------------------------------------


def is_in_tree(g: Digraph) -> bool:
    return (
        g.arc_count == g.n - 1
        and is_weakly_connected(g)
        and all(r.bit_count() <= 1 for r in g.rows)
    )


def is_transitive_tournament(g: Digraph) -> bool:
    n = g.n
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_arc(u, v) == g.has_arc(v, u):
                return False
    return sorted(r.bit_count() for r in g.rows) == list(range(n))


def is_directed_cycle(g: Digraph) -> bool:
    return (
        g.n >= 2
        and all(r.bit_count() == 1 for r in g.rows)
        and all(c.bit_count() == 1 for c in g.cols)
        and is_weakly_connected(g)
    )


def is_bidirected_cycle(g: Digraph) -> bool:
    if g.n < 3 or g.arc_count != 2 * g.n:
        return False
    if any(g.rows[v] != g.cols[v] for v in range(g.n)):
        return False
    return all(r.bit_count() == 2 for r in g.rows) and is_weakly_connected(g)


def is_bidirected_complete(g: Digraph) -> bool:
    full = (1 << g.n) - 1
    return all(g.rows[v] == full & ~(1 << v) for v in range(g.n))


def _weak_components(g: Digraph, mask: int) -> list[int]:
    comps = []
    remaining = mask
    while remaining:
        seed = remaining & -remaining
        comp = 0
        frontier = seed
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                v = low.bit_length() - 1
                nxt |= (g.rows[v] | g.cols[v]) & mask
                m ^= low
            frontier = nxt & ~comp
        comps.append(comp)
        remaining &= ~comp
    return comps


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _core_decomposes(g: Digraph, core_mask: int) -> bool:
    """Arcs are exactly: core arcs, in-tree arcs, one root arc per tree."""
    outside = ((1 << g.n) - 1) & ~core_mask
    for v in _bits(core_mask):
        if g.rows[v] & outside:
            return False
    for v in _bits(outside):
        if g.rows[v].bit_count() != 1:
            return False
    for comp in _weak_components(g, outside):
        members = _bits(comp)
        sub = induced_subdigraph(g, members)
        if not is_in_tree(sub):
            return False
        leaving = [v for v in members if g.rows[v] & core_mask]
        if len(leaving) != 1:
            return False
    return True


def matches_theorem210_structure(g: Digraph, r: int) -> bool:
    """Equality-family test for the minimal Laplacian energy in a
    dichromatic class: a cycle core (r=2) or bidirected complete core
    (r>=3) whose pendant components are in-trees, each root sending exactly
    one arc into the core."""
    if r < 2:
        return False
    n = g.n
    if r == 2:
        if n == 2:
            return g.rows == (2, 1)  # the single digon
        for size in range(3, n + 1):
            for combo in itertools.combinations(range(n), size):
                sub = induced_subdigraph(g, combo)
                if not is_directed_cycle(sub):
                    continue
                mask = 0
                for v in combo:
                    mask |= 1 << v
                if _core_decomposes(g, mask):
                    return True
        return False
    if n < r:
        return False
    for combo in itertools.combinations(range(n), r):
        sub = induced_subdigraph(g, combo)
        if not is_bidirected_complete(sub):
            continue
        mask = 0
        for v in combo:
            mask |= 1 << v
        if _core_decomposes(g, mask):
            return True
    return False


@dataclass(frozen=True)
class StructureReport:
    is_in_tree: bool
    is_transitive_tournament: bool
    is_directed_cycle: bool
    is_bidirected_cycle: bool
    is_bidirected_complete: bool
    matches_theorem210_structure: bool | None


def classify(g: Digraph, r: int | None = None) -> StructureReport:
    """Recognize the named families; when r is given, also test the
    minimal-energy structure for dichromatic number r."""
    return StructureReport(
        is_in_tree=is_in_tree(g),
        is_transitive_tournament=is_transitive_tournament(g),
        is_directed_cycle=is_directed_cycle(g),
        is_bidirected_cycle=is_bidirected_cycle(g),
        is_bidirected_complete=is_bidirected_complete(g),
        matches_theorem210_structure=(
            None if r is None else matches_theorem210_structure(g, r)
        ),
    )
