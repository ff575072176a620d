"""Closed-form Laplacian-moment bounds per dichromatic class.

Everything here is exact: values are ``fractions.Fraction`` (several of the
expressions carry denominators 2, 3, 6 and 32), and integrality at attained
bounds is asserted where tests construct the witnesses, never assumed.

Composition optimizers scan nonincreasing compositions only; extremal
values are invariant under part permutation, so this drops a factor r!.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .families import Composition, compositions

KIND_IN_TREE = "intree"
KIND_TOURNAMENT = "tt"

OBJ_JOIN_LE_MIN = "join_le_min"
OBJ_JOIN_LE_MAX = "join_le_max"
OBJ_JOIN_LSM3_LOWER = "join_lsm3_lower"
OBJ_JOIN_LSM3_UPPER = "join_lsm3_upper"


@dataclass(frozen=True)
class BoundReport:
    theorem_id: str
    n: int
    r: int | None
    composition: tuple[int, ...] | None
    value: Fraction
    p_term: Fraction | None
    q_term: Fraction | None
    extremal_description: str

    def to_json(self) -> str:
        obj = {
            "theorem": self.theorem_id,
            "n": self.n,
            "r": self.r,
            "value_num": self.value.numerator,
            "value_den": self.value.denominator,
            "description": self.extremal_description,
        }
        if self.composition is not None:
            obj["composition"] = list(self.composition)
        if self.p_term is not None:
            obj["p"] = [self.p_term.numerator, self.p_term.denominator]
        if self.q_term is not None:
            obj["q"] = [self.q_term.numerator, self.q_term.denominator]
        return json.dumps(obj)


def global_le_bounds(n: int, acyclic: bool = False) -> tuple[BoundReport, BoundReport]:
    """Sharp (lower, upper) Laplacian energy bounds over connected digraphs
    of order n: n-1 at in-trees; n^2(n-1) at the bidirected complete graph,
    or n(n-1)(2n-1)/6 at the transitive tournament when restricted to
    acyclic digraphs."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    lower = BoundReport(
        theorem_id="Lem22",
        n=n,
        r=None,
        composition=None,
        value=Fraction(n - 1),
        p_term=None,
        q_term=None,
        extremal_description="in-tree",
    )
    if acyclic:
        upper = BoundReport(
            theorem_id="Lem23",
            n=n,
            r=None,
            composition=None,
            value=Fraction(n * (n - 1) * (2 * n - 1), 6),
            p_term=None,
            q_term=None,
            extremal_description="transitive tournament",
        )
    else:
        upper = BoundReport(
            theorem_id="Lem22",
            n=n,
            r=None,
            composition=None,
            value=Fraction(n * n * (n - 1)),
            p_term=None,
            q_term=None,
            extremal_description="bidirected complete graph",
        )
    return lower, upper


def balanced_composition(n: int, r: int) -> Composition:
    ceil_, floor_, rem = -(-n // r), n // r, n % r
    return Composition((ceil_,) * rem + (floor_,) * (r - rem))


def _max_le_value(n: int, r: int) -> tuple[Fraction, Fraction | None, Fraction | None]:
    """Maximal join LE: balanced transitive tournaments, split on r | n."""
    if n % r == 0:
        value = (
            (1 + Fraction(1, 3 * r * r) - Fraction(1, r)) * n ** 3
            - Fraction(n * n, 2 * r)
            + Fraction(n, 6)
        )
        return value, None, None
    ceil_, floor_ = -(-n // r), n // r
    p = ceil_ ** 2 * (n - r * floor_) * (Fraction(ceil_, 3) - n - Fraction(1, 2))
    q = floor_ ** 2 * (n - r * ceil_) * (Fraction(floor_, 3) - n - Fraction(1, 2))
    return n ** 3 + Fraction(n, 6) + p - q, p, q


def join_le_extreme(n: int, r: int, direction: str) -> BoundReport:
    """Extreme Laplacian energy over join digraphs with r parts: the
    minimum is attained by in-trees at composition (n-r+1, 1, ..., 1), the
    maximum by balanced transitive tournaments."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if direction == "min":
        comp = (n - r + 1,) + (1,) * (r - 1)
        return BoundReport(
            theorem_id="Thm25",
            n=n,
            r=r,
            composition=comp,
            value=Fraction((r - 1) * n * n + r * r * n - r ** 3),
            p_term=None,
            q_term=None,
            extremal_description=f"in-trees of sizes {comp}",
        )
    if direction == "max":
        value, p, q = _max_le_value(n, r)
        comp = balanced_composition(n, r).parts
        return BoundReport(
            theorem_id="Thm26",
            n=n,
            r=r,
            composition=comp,
            value=value,
            p_term=p,
            q_term=q,
            extremal_description=f"transitive tournaments of sizes {comp}",
        )
    raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")


def all_digraph_le_extreme(n: int, r: int, direction: str) -> BoundReport:
    """Extreme Laplacian energy over all connected digraphs with
    dichromatic number r.  The minimum comes from a cycle core (r=2) or a
    bidirected complete core (r>=3) with pendant in-trees; the maximum
    coincides with the join maximum."""
    if r < 2 or (r == 2 and n < 2) or (r >= 3 and n < r):
        raise ValueError(f"infeasible class: n={n}, r={r} (need r=2,n>=2 or r>=3,n>=r)")
    if direction == "min":
        if r == 2:
            value = 4 if n == 2 else n
            desc = (
                "directed cycle C_2" if n == 2
                else "directed cycle core with pendant in-trees"
            )
        else:
            value = n + r ** 3 - r ** 2 - r
            desc = f"bidirected complete core K{r} with pendant in-trees"
        return BoundReport(
            theorem_id="Thm210",
            n=n,
            r=r,
            composition=None,
            value=Fraction(value),
            p_term=None,
            q_term=None,
            extremal_description=desc,
        )
    if direction == "max":
        inner = join_le_extreme(n, r, "max")
        return BoundReport(
            theorem_id="Thm211",
            n=n,
            r=r,
            composition=inner.composition,
            value=inner.value,
            p_term=inner.p_term,
            q_term=inner.q_term,
            extremal_description=inner.extremal_description,
        )
    raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")


def join_le_closed_form(n: int, composition: Composition, kind: str) -> Fraction:
    """Exact Laplacian energy of the join digraph whose parts are all
    in-trees or all transitive tournaments of the given sizes."""
    if composition.n != n:
        raise ValueError(f"composition sums to {composition.n}, expected {n}")
    parts = composition.parts
    r = len(parts)
    if kind == KIND_IN_TREE:
        base = n ** 3 + 3 * n * n - (2 * r - 3) * n - r
        return Fraction(base + sum(ni * ni * (ni - 2 * n - 3) for ni in parts))
    if kind == KIND_TOURNAMENT:
        base = n ** 3 + Fraction(n, 6)
        return base + sum(
            ni * ni * (Fraction(ni, 3) - n - Fraction(1, 2)) for ni in parts
        )
    raise ValueError(f"kind must be '{KIND_IN_TREE}' or '{KIND_TOURNAMENT}'")


def _lsm3_cross_term(n: int, parts: tuple[int, ...]) -> int:
    return sum(
        ni * sum(ns * (n - ns - ni) for s, ns in enumerate(parts) if s != i)
        for i, ni in enumerate(parts)
    )


def join_lsm3_closed_form(n: int, composition: Composition, kind: str) -> Fraction:
    """Exact third Laplacian spectral moment of the join digraph whose
    parts are all in-trees (the sharp lower expression) or all transitive
    tournaments (the sharp upper expression)."""
    if composition.n != n:
        raise ValueError(f"composition sums to {composition.n}, expected {n}")
    parts = composition.parts
    r = len(parts)
    cross = _lsm3_cross_term(n, parts)
    if kind == KIND_IN_TREE:
        total = sum(
            -ni ** 4
            + (3 * n + 6) * ni ** 3
            - (3 * n * n + 12 * n + 6) * ni * ni
            + (n ** 3 + 6 * n * n + 9 * n + 4) * ni
            for ni in parts
        )
        return Fraction(total - r * (3 * n * n + 3 * n + 1) - cross)
    if kind == KIND_TOURNAMENT:
        total = sum(
            -Fraction(ni ** 4, 4)
            + (n + Fraction(5, 2)) * ni ** 3
            - (Fraction(3 * n * n, 2) + Fraction(9 * n, 2) + Fraction(1, 4)) * ni * ni
            + (n ** 3 + Fraction(3 * n * n, 2) + Fraction(n, 2)) * ni
            for ni in parts
        )
        return total - cross
    raise ValueError(f"kind must be '{KIND_IN_TREE}' or '{KIND_TOURNAMENT}'")


def join_lsm3_from_parts(parts) -> int:
    """Third Laplacian moment of the join of acyclic parts from their
    degree data alone: sum over vertices of (n - n_i + d_part)^3, plus
    3 sum n_i (n - n_i)^2, minus the cross term.

    Parts must be acyclic (no digons or directed triangles inside a part),
    which is what makes the closed walk bookkeeping collapse to this form.
    """
    sizes = tuple(p.n for p in parts)
    n = sum(sizes)
    cubes = 0
    for ni, part in zip(sizes, parts):
        cubes += sum((n - ni + d) ** 3 for d in part.out_degrees())
    middle = 3 * sum(ni * (n - ni) ** 2 for ni in sizes)
    return cubes + middle - _lsm3_cross_term(n, sizes)


def cor34_bounds(n: int) -> tuple[BoundReport, BoundReport]:
    """Sharp third-moment bounds over two-part join digraphs: the lower
    bound n^3+8n-16 at composition (n-1, 1) with in-trees, the upper
    quartic at the balanced tournament composition."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    lower = BoundReport(
        theorem_id="Cor34Lower",
        n=n,
        r=2,
        composition=(n - 1, 1),
        value=Fraction(n ** 3 + 8 * n - 16),
        p_term=None,
        q_term=None,
        extremal_description=f"in-trees of sizes ({n - 1}, 1)",
    )
    if n % 2 == 0:
        upper_value = Fraction(15 * n ** 4 - 4 * n ** 3 + 12 * n * n, 32)
    else:
        upper_value = Fraction(15 * n ** 4 - 4 * n ** 3 + 6 * n * n - 12 * n - 5, 32)
    half_up, half_down = -(-n // 2), n // 2
    upper = BoundReport(
        theorem_id="Cor34Upper",
        n=n,
        r=2,
        composition=(half_up, half_down),
        value=upper_value,
        p_term=None,
        q_term=None,
        extremal_description=f"transitive tournaments of sizes ({half_up}, {half_down})",
    )
    return lower, upper


@dataclass(frozen=True)
class KaramataParams:
    """Coefficients of the objective f(x) = x^2 (a - b x)."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.b <= 0:
            raise ValueError("b must be positive")

    def f(self, x: int) -> Fraction:
        return x * x * (self.a - self.b * x)


def karamata_move(
    params: KaramataParams, composition: Composition, i: int, j: int
) -> Composition | None:
    """Transfer one unit from part i to part j when the convexity
    preconditions hold (gap >= 2 and parts[j] < a/(3b) - 1), re-sorting
    nonincreasing.  The sum of f over the parts strictly decreases; returns
    None when the preconditions fail."""
    parts = composition.parts
    if not (0 <= i < len(parts) and 0 <= j < len(parts)):
        raise IndexError(f"part indices ({i}, {j}) out of range")
    if i == j:
        return None
    if parts[i] - parts[j] < 2:
        return None
    if not parts[j] < params.a / (3 * params.b) - 1:
        return None
    moved = list(parts)
    moved[i] -= 1
    moved[j] += 1
    result = Composition(tuple(sorted(moved, reverse=True)))
    before = sum(params.f(x) for x in parts)
    after = sum(params.f(x) for x in result.parts)
    assert after < before, "move failed to decrease the objective"
    return result


def karamata_edges(
    n: int, r: int, params: KaramataParams
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All one-unit balancing moves between nonincreasing compositions of
    n into r parts, as (source, target) pairs."""
    edges = []
    for comp in compositions(n, r):
        seen = set()
        for i in range(r):
            for j in range(r):
                moved = karamata_move(params, comp, i, j)
                if moved is not None and moved.parts not in seen:
                    seen.add(moved.parts)
                    edges.append((comp.parts, moved.parts))
    return edges


_OBJECTIVES = {
    OBJ_JOIN_LE_MIN: (join_le_closed_form, KIND_IN_TREE),
    OBJ_JOIN_LE_MAX: (join_le_closed_form, KIND_TOURNAMENT),
    OBJ_JOIN_LSM3_LOWER: (join_lsm3_closed_form, KIND_IN_TREE),
    OBJ_JOIN_LSM3_UPPER: (join_lsm3_closed_form, KIND_TOURNAMENT),
}

_LE_PARAMS = {
    OBJ_JOIN_LE_MIN: lambda n: KaramataParams(Fraction(2 * n + 3), Fraction(1)),
    OBJ_JOIN_LE_MAX: lambda n: KaramataParams(n + Fraction(1, 2), Fraction(1, 3)),
}


@dataclass(frozen=True)
class OptimizedComposition:
    composition: Composition
    value: Fraction


def _greedy_endpoint(
    n: int,
    r: int,
    start: Composition,
    params: KaramataParams,
    evaluate,
    direction: str,
) -> Composition:
    """Walk single-unit moves until no move improves the objective.

    Balancing moves strictly decrease sum f, unbalancing moves strictly
    increase it; the closed forms are a constant minus sum f, so "max"
    walks toward the balanced composition and "min" toward
    (n-r+1, 1, ..., 1).
    """
    comp = start
    while True:
        parts = list(comp.parts)
        if direction == "max":
            nxt = karamata_move(params, comp, 0, r - 1)
            if nxt is None:
                return comp
        else:
            givers = [j for j in range(1, r) if parts[j] >= 2]
            if not givers:
                return comp
            j = givers[-1]
            parts[0] += 1
            parts[j] -= 1
            nxt = Composition(tuple(sorted(parts, reverse=True)))
        before, after = evaluate(comp), evaluate(nxt)
        assert (after > before) == (direction == "max") and after != before
        comp = nxt


def optimize_composition(
    n: int, r: int, objective: str, direction: str
) -> OptimizedComposition:
    """Arg-extreme composition for one of the four join closed forms, by
    exhaustive scan over nonincreasing compositions.  For the two energy
    objectives a single-unit-move greedy walk from an arbitrary interior
    start must land on the same composition, and this is asserted."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    if objective not in _OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    form, kind = _OBJECTIVES[objective]

    def evaluate(comp: Composition) -> Fraction:
        return form(n, comp, kind)

    best: Composition | None = None
    best_value: Fraction | None = None
    all_comps = list(compositions(n, r))
    for comp in all_comps:
        value = evaluate(comp)
        if best_value is None or (value < best_value if direction == "min" else value > best_value):
            best, best_value = comp, value

    if objective in _LE_PARAMS and r >= 2:
        params = _LE_PARAMS[objective](n)
        start = all_comps[len(all_comps) // 2]
        endpoint = _greedy_endpoint(n, r, start, params, evaluate, direction)
        assert endpoint.parts == best.parts, (
            f"greedy endpoint {endpoint.parts} differs from scan {best.parts}"
        )
    return OptimizedComposition(best, best_value)
