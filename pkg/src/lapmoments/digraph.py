"""Loop-free simple digraphs on labeled vertices 0..n-1.

Arc membership is stored densely: ``rows[u]`` is an integer bitmask whose
bit ``v`` is set iff the arc (u, v) is present.  Python integers are
arbitrary precision, so the same representation serves both the hot
enumeration paths (n <= 64, one machine word per row) and larger
construction-only digraphs.  Digraph values are immutable after
construction and safe to share between threads.

"Connected" throughout this package means weakly connected: the underlying
undirected graph is connected.  (In-trees are never strongly connected but
are treated as connected digraphs.)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class Digraph:
    """Immutable simple digraph without loops or multiple arcs."""

    __slots__ = ("n", "rows", "_cols")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        rows = [0] * n
        count = 0
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop ({u},{u}) not allowed")
            bit = 1 << v
            if rows[u] & bit:
                raise ValueError(f"duplicate arc ({u},{v})")
            rows[u] |= bit
            count += 1
        self.n = n
        self.rows = tuple(rows)
        self._cols: tuple[int, ...] | None = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Digraph":
        """Build from precomputed row bitmasks (trusted, loop bits stripped)."""
        g = cls.__new__(cls)
        n = len(rows)
        g.n = n
        g.rows = tuple(r & ~(1 << u) & ((1 << n) - 1) for u, r in enumerate(rows))
        g._cols = None
        return g

    # -- basic queries ---------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    @property
    def arc_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def arcs(self) -> Iterator[tuple[int, int]]:
        """Arcs in (u, v) lexicographic order."""
        for u, row in enumerate(self.rows):
            while row:
                low = row & -row
                yield u, low.bit_length() - 1
                row ^= low

    @property
    def cols(self) -> tuple[int, ...]:
        """Column bitmasks: ``cols[v]`` has bit u set iff (u, v) is an arc."""
        if self._cols is None:
            cols = [0] * self.n
            for u, row in enumerate(self.rows):
                bit = 1 << u
                while row:
                    low = row & -row
                    cols[low.bit_length() - 1] |= bit
                    row ^= low
            self._cols = tuple(cols)
        return self._cols

    def out_degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def in_degrees(self) -> list[int]:
        return [c.bit_count() for c in self.cols]

    # -- dunder plumbing -------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs())})"

    # -- arc-set integer code --------------------------------------------

    def arc_code(self) -> int:
        """Encode the arc set as an n(n-1)-bit integer (diagonal skipped)."""
        code = 0
        for u, v in self.arcs():
            code |= 1 << arc_position(self.n, u, v)
        return code

    @classmethod
    def from_arc_code(cls, n: int, code: int) -> "Digraph":
        rows = [0] * n
        while code:
            low = code & -code
            u, v = arc_from_position(n, low.bit_length() - 1)
            rows[u] |= 1 << v
            code ^= low
        return cls.from_rows(rows)


def arc_position(n: int, u: int, v: int) -> int:
    """Bit index of arc (u, v) in the n(n-1)-bit arc-set code."""
    return u * (n - 1) + (v if v < u else v - 1)


def arc_from_position(n: int, pos: int) -> tuple[int, int]:
    u, k = divmod(pos, n - 1)
    return u, k if k < u else k + 1


@dataclass(frozen=True)
class WalkProfile:
    """Per-vertex degrees and closed-walk counts of a digraph.

    ``c2_per_vertex[v]`` counts directed closed 2-walks rooted at v (one per
    digon through v); ``c3_total`` counts rooted directed closed 3-walks,
    i.e. every directed triangle once per choice of start vertex, matching
    the trace convention tr(A^3).
    """

    out_deg: tuple[int, ...]
    in_deg: tuple[int, ...]
    c2_per_vertex: tuple[int, ...]
    c2_total: int
    c3_total: int


def walk_profile(g: Digraph) -> WalkProfile:
    rows, cols = g.rows, g.cols
    out_deg = tuple(r.bit_count() for r in rows)
    in_deg = tuple(c.bit_count() for c in cols)
    c2 = tuple((rows[v] & cols[v]).bit_count() for v in range(g.n))
    # rooted closed 3-walks: arcs (v, u) followed by u -> w -> v
    c3 = 0
    for v in range(g.n):
        row = rows[v]
        col = cols[v]
        while row:
            low = row & -row
            u = low.bit_length() - 1
            c3 += (rows[u] & col).bit_count()
            row ^= low
    return WalkProfile(out_deg, in_deg, c2, sum(c2), c3)


def is_acyclic(g: Digraph) -> bool:
    """True iff a topological order exists (digons count as cycles)."""
    rows = g.rows
    alive = (1 << g.n) - 1
    while alive:
        removed = 0
        m = alive
        while m:
            low = m & -m
            if rows[low.bit_length() - 1] & alive == 0:
                removed |= low
            m ^= low
        if not removed:
            return False
        alive &= ~removed
    return True


def is_weakly_connected(g: Digraph) -> bool:
    """True iff the underlying undirected graph is connected."""
    rows, cols = g.rows, g.cols
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            v = low.bit_length() - 1
            nxt |= rows[v] | cols[v]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def induced_subdigraph(g: Digraph, vertices: Iterable[int]) -> Digraph:
    """Subdigraph induced by a vertex subset, relabeled 0..|S|-1.

    Relabeling preserves the order of the original labels, so witnesses are
    reproducible.
    """
    order = sorted(set(vertices))
    if not order:
        raise ValueError("vertex subset must be nonempty")
    if order[0] < 0 or order[-1] >= g.n:
        raise ValueError(f"vertex subset out of range for n={g.n}")
    index = {v: i for i, v in enumerate(order)}
    arcs = [
        (index[u], index[v])
        for u, v in g.arcs()
        if u in index and v in index
    ]
    return Digraph(len(order), arcs)


def join(g1: Digraph, g2: Digraph) -> Digraph:
    """Disjoint union plus digons between every cross pair of vertices."""
    n1, n2 = g1.n, g2.n
    n = n1 + n2
    cross_hi = ((1 << n2) - 1) << n1
    cross_lo = (1 << n1) - 1
    rows = [g1.rows[u] | cross_hi for u in range(n1)]
    rows += [(g2.rows[u] << n1) | cross_lo for u in range(n2)]
    return Digraph.from_rows(rows)


# -- external formats ---------------------------------------------------


def to_edge_list(g: Digraph) -> str:
    """Text form: first line "n e", then one "u v" line per arc."""
    lines = [f"{g.n} {g.arc_count}"]
    lines.extend(f"{u} {v}" for u, v in g.arcs())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Digraph:
    """Parse the edge-list text format; errors carry 1-based line numbers."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ValueError("line 1: expected header 'n e'")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("line 1: expected header 'n e'")
    try:
        n, e = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError("line 1: expected two integers 'n e'") from None
    arcs = []
    lineno = 1
    for raw in lines[1:]:
        lineno += 1
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        try:
            arcs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers") from None
    if len(arcs) != e:
        raise ValueError(f"header declares {e} arcs, found {len(arcs)}")
    try:
        return Digraph(n, arcs)
    except ValueError as exc:
        raise ValueError(str(exc)) from None


def to_dot(g: Digraph, name: str = "g") -> str:
    """DOT export: one edge statement per arc."""
    lines = [f"digraph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -> {v};" for u, v in g.arcs())
    lines.append("}")
    return "\n".join(lines) + "\n"
