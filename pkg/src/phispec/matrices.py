"""Weighted adjacency matrices and equitable quotients.

The weighted adjacency matrix of a graph G under a weight phi has entry
phi(deg(u), deg(v)) wherever u ~ v and 0 elsewhere (zero diagonal), so it is
symmetric by construction.  Dense numpy arrays throughout; intended scale is
n up to a couple thousand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graphs import Graph
from .weights import WeightFunction

EQUITABLE_TOL = 1e-9


def assemble(g: Graph, w: WeightFunction) -> np.ndarray:
    """Dense weighted adjacency matrix of g under w.

    Each edge weight is computed once and written to both mirror entries, so
    the result is exactly symmetric in floating point.
    """
    deg = g.degrees
    m = np.zeros((g.n, g.n))
    for u, v in g.edges:
        val = w.eval(deg[u], deg[v])
        m[u, v] = val
        m[v, u] = val
    return m


def assemble_exact(g: Graph, w: WeightFunction) -> list[list[Fraction]]:
    """Exact rational weighted adjacency matrix.

    Raises ValueError if w is irrational at some occurring degree pair.
    """
    deg = g.degrees
    m = [[Fraction(0)] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        val = w.rational(deg[u], deg[v])
        if val is None:
            raise ValueError(
                f"{w.id} is irrational at degree pair ({deg[u]}, {deg[v]})")
        m[u][v] = val
        m[v][u] = val
    return m


def matrix_to_csv(m: np.ndarray) -> str:
    """CSV dump of a matrix at full precision (17 significant digits)."""
    lines = [",".join(f"{x:.17g}" for x in row) for row in np.asarray(m, dtype=float)]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Partition:
    """Ordered partition of 0..n-1 into non-empty disjoint cells."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.cells:
            raise ValueError("partition needs at least one cell")
        seen: set[int] = set()
        for cell in self.cells:
            if not cell:
                raise ValueError("partition cells must be non-empty")
            for v in cell:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two cells")
                seen.add(v)
        if seen != set(range(len(seen))) :
            raise ValueError("cells must cover 0..n-1 exactly")

    @classmethod
    def of(cls, cells: Sequence[Sequence[int]]) -> "Partition":
        return cls(tuple(tuple(int(v) for v in cell) for cell in cells))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)


def parts_partition(parts: Sequence[int]) -> Partition:
    """The consecutive-blocks partition matching the family constructors."""
    cells = []
    start = 0
    for p in parts:
        cells.append(tuple(range(start, start + p)))
        start += p
    return Partition(tuple(cells))


def _block_row_sums(m: np.ndarray, p: Partition) -> list[list[np.ndarray]]:
    return [
        [m[np.ix_(ci, cj)].sum(axis=1) for cj in p.cells]
        for ci in p.cells
    ]


def is_equitable(m: np.ndarray, p: Partition, tol: float = EQUITABLE_TOL) -> bool:
    """True when every block's row sums agree within an absolute tolerance.

    A partition is equitable for m when, for each cell pair (i, j), all rows
    of the (cell_i x cell_j) block have the same sum.
    """
    m = np.asarray(m, dtype=float)
    if p.n != m.shape[0]:
        raise ValueError(f"partition covers {p.n} vertices, matrix has {m.shape[0]}")
    for row_blocks in _block_row_sums(m, p):
        for sums in row_blocks:
            if sums.max() - sums.min() > tol:
                return False
    return True


def quotient(m: np.ndarray, p: Partition) -> np.ndarray:
    """Quotient matrix of average block row sums (exact for equitable p)."""
    m = np.asarray(m, dtype=float)
    if p.n != m.shape[0]:
        raise ValueError(f"partition covers {p.n} vertices, matrix has {m.shape[0]}")
    l = len(p.cells)
    q = np.zeros((l, l))
    for i, row_blocks in enumerate(_block_row_sums(m, p)):
        for j, sums in enumerate(row_blocks):
            q[i, j] = sums.mean()
    return q


def multipartite_quotient(parts: Sequence[int], w: WeightFunction) -> np.ndarray:
    """The t x t quotient of the complete multipartite weighted matrix.

    Vertex degrees are d_i = n - p_i, and a vertex of part i sees p_j vertices
    of part j, so entry (i, j) is p_j * phi(d_i, d_j) off the diagonal.  Not
    symmetric for unequal parts, but always similar to a symmetric matrix, so
    its spectrum is real.
    """
    parts = [int(p) for p in parts]
    if len(parts) < 2 or min(parts) < 1:
        raise ValueError(f"need t >= 2 parts, all >= 1, got {parts}")
    n = sum(parts)
    t = len(parts)
    q = np.zeros((t, t))
    for i in range(t):
        for j in range(t):
            if i != j:
                q[i, j] = parts[j] * w.eval(n - parts[i], n - parts[j])
    return q


def multipartite_quotient_exact(
    parts: Sequence[int], w: WeightFunction
) -> list[list[Fraction]]:
    """Exact rational version of multipartite_quotient.

    Raises ValueError if w is irrational at some needed degree pair.
    """
    parts = [int(p) for p in parts]
    if len(parts) < 2 or min(parts) < 1:
        raise ValueError(f"need t >= 2 parts, all >= 1, got {parts}")
    n = sum(parts)
    t = len(parts)
    q = [[Fraction(0)] * t for _ in range(t)]
    for i in range(t):
        for j in range(t):
            if i != j:
                val = w.rational(n - parts[i], n - parts[j])
                if val is None:
                    raise ValueError(
                        f"{w.id} is irrational at degree pair ({n - parts[i]}, {n - parts[j]})")
                q[i][j] = parts[j] * val
    return q
