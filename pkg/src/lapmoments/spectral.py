"""Exact spectral moments of the digraph Laplacian L = D+ - A.

L is generally non-symmetric, so its eigenvalues may be complex; the k-th
moment is nevertheless an exact integer because it equals tr(L^k).  All
moment computations here run in exact integer arithmetic (Python ints, no
overflow).  A floating-point eigenvalue path exists purely as a diagnostic
cross-check and never feeds exact results.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .digraph import Digraph, walk_profile

Matrix = list[list[int]]


def laplacian(g: Digraph) -> Matrix:
    """Integer Laplacian matrix: diagonal out-degrees, -1 per arc."""
    n = g.n
    mat = [[0] * n for _ in range(n)]
    for u, row in enumerate(g.rows):
        mat[u][u] = row.bit_count()
        while row:
            low = row & -row
            mat[u][low.bit_length() - 1] = -1
            row ^= low
    return mat


def adjacency(g: Digraph) -> Matrix:
    n = g.n
    mat = [[0] * n for _ in range(n)]
    for u, v in g.arcs():
        mat[u][v] = 1
    return mat


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = [list(col) for col in zip(*b)]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _trace(a: Matrix) -> int:
    return sum(a[i][i] for i in range(len(a)))


def _trace_of_power_iterative(mat: Matrix, k: int) -> int:
    """tr(M^k) by k-1 successive products."""
    n = len(mat)
    if k == 0:
        return n
    acc = mat
    for _ in range(k - 1):
        acc = _mat_mul(acc, mat)
    return _trace(acc)


def _trace_of_power_squaring(mat: Matrix, k: int) -> int:
    """tr(M^k) by binary exponentiation; independent of the iterative path."""
    n = len(mat)
    if k == 0:
        return n
    result = None
    base = mat
    e = k
    while e:
        if e & 1:
            result = base if result is None else _mat_mul(result, base)
        e >>= 1
        if e:
            base = _mat_mul(base, base)
    return _trace(result)


def lsm_trace(g: Digraph, k: int) -> int:
    """k-th Laplacian spectral moment, exact: tr(L^k).

    k=0 gives n, k=1 gives the arc count, k=2 the Laplacian energy.
    """
    if k < 0:
        raise ValueError(f"moment order must be >= 0, got {k}")
    return _trace_of_power_iterative(laplacian(g), k)


def lsm_trace_squaring(g: Digraph, k: int) -> int:
    """Same moment through power-by-squaring; kept as an independent path."""
    if k < 0:
        raise ValueError(f"moment order must be >= 0, got {k}")
    return _trace_of_power_squaring(laplacian(g), k)


def adjacency_moment(g: Digraph, k: int) -> int:
    """tr(A^k) = number of rooted directed closed k-walks."""
    if k < 0:
        raise ValueError(f"moment order must be >= 0, got {k}")
    return _trace_of_power_iterative(adjacency(g), k)


def le_via_degrees(g: Digraph) -> int:
    """Laplacian energy from the walk profile: sum of squared out-degrees
    plus the closed 2-walk count.  Identical to lsm_trace(g, 2)."""
    p = walk_profile(g)
    return sum(d * d for d in p.out_deg) + p.c2_total


def lsm3_via_walks(g: Digraph) -> int:
    """Third moment from the walk profile:
    sum d^3 + 3 * sum d*c2(v) - c3.  Identical to lsm_trace(g, 3)."""
    p = walk_profile(g)
    cubes = sum(d ** 3 for d in p.out_deg)
    mixed = sum(d * c for d, c in zip(p.out_deg, p.c2_per_vertex))
    return cubes + 3 * mixed - p.c3_total


@dataclass(frozen=True)
class MomentReport:
    """Exact moment next to its floating-point eigenvalue estimate."""

    k: int
    lsm_exact: int
    adjacency_moment: int
    lsm_numeric: float
    residual: float
    tolerance: float = 1e-6

    @property
    def flagged(self) -> bool:
        """True when the numeric estimate missed the declared tolerance."""
        return self.residual > self.tolerance

    def to_json(self) -> str:
        return json.dumps(
            {
                "k": self.k,
                "lsm_exact": self.lsm_exact,
                "adjacency_moment": self.adjacency_moment,
                "lsm_numeric": self.lsm_numeric,
                "residual": self.residual,
            }
        )


class EigenvalueError(RuntimeError):
    """Numeric eigenvalue iteration failed; carries the matrix."""

    def __init__(self, message: str, matrix):
        super().__init__(message)
        self.matrix = matrix


def lsm_numeric(g: Digraph, k: int, tolerance: float = 1e-6) -> MomentReport:
    """Diagnostic cross-check of lsm_trace via numpy eigenvalues.

    L may be defective and complex-spectrum; this path never feeds exact
    results.  A residual above tolerance is reported, not raised; an
    out-of-tolerance imaginary part in the moment sum is an error.
    """
    import numpy as np

    if k < 0:
        raise ValueError(f"moment order must be >= 0, got {k}")
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    mat = np.array(laplacian(g), dtype=float)
    try:
        eigs = np.linalg.eigvals(mat)
    except np.linalg.LinAlgError as exc:
        raise EigenvalueError(f"eigenvalue iteration failed: {exc}", mat) from exc
    total = np.sum(eigs ** k)
    scale = max(1.0, float(np.max(np.abs(eigs))) ** k * g.n)
    if abs(total.imag) > tolerance * scale:
        raise EigenvalueError(
            f"imaginary part {total.imag} of moment sum exceeds tolerance", mat
        )
    exact = lsm_trace(g, k)
    numeric = float(total.real)
    residual = abs(exact - numeric)
    return MomentReport(
        k=k,
        lsm_exact=exact,
        adjacency_moment=adjacency_moment(g, k),
        lsm_numeric=numeric,
        residual=residual,
        tolerance=tolerance,
    )
