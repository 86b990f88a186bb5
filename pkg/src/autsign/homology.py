"""The graph chain complex over exact integers: boundary matrix, fundamental
cycle bases, induced cycle-space matrices, and determinant signs.

No floating point anywhere; Python ints make every determinant exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automorphism import Automorphism, induced_signed_edge_perm
from .multigraph import Multigraph, Orientation, SpanningForest


class UnimodularityError(ArithmeticError):
    """An induced cycle-space matrix had |det| != 1; this indicates a bug
    upstream, since group elements must act invertibly on an integer lattice."""


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of arbitrary-precision integers, row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match the shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        if rows:
            cols = len(rows[0])
        elif cols is None:
            cols = 0
        flat: list[int] = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(len(rows), cols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        flat: list[int] = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                flat.append(sum(ri[k] * other.entry(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(flat))


@dataclass(frozen=True)
class CycleBasis:
    """Fundamental cycles of a spanning forest, as a basis of the cycle space.

    ``cycles[i]`` is a dense edge-coefficient vector with +1 on
    ``non_tree_edges[i]``, 0 on every other non-tree edge, and tree
    coefficients in {-1, 0, +1}. The coordinates of any cycle in this basis
    are just its non-tree-edge coefficients.
    """

    forest: SpanningForest
    non_tree_edges: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]


def boundary_matrix(g: Multigraph, o: Orientation) -> IntMatrix:
    """|V| x |E| boundary: column e is head(e) - tail(e); loops give zero columns."""
    n, m = g.vertex_count, g.edge_count
    flat = [0] * (n * m)
    for e in range(m):
        flat[g.endpoint[o.head(e)] * m + e] += 1
        flat[g.endpoint[o.tail[e]] * m + e] -= 1
    return IntMatrix(n, m, tuple(flat))


def _tree_path(
    adjacency: dict[int, list[tuple[int, int]]], start: int, goal: int
) -> list[tuple[int, int, int]]:
    """Steps (from_vertex, edge, to_vertex) along the unique forest path."""
    if start == goal:
        return []
    parent: dict[int, tuple[int, int] | None] = {start: None}
    queue = [start]
    qi = 0
    while qi < len(queue) and goal not in parent:
        u = queue[qi]
        qi += 1
        for e, w in adjacency[u]:
            if w not in parent:
                parent[w] = (u, e)
                queue.append(w)
    if goal not in parent:
        raise ValueError("forest does not connect the endpoints of a non-tree edge")
    steps: list[tuple[int, int, int]] = []
    v = goal
    while True:
        prev = parent[v]
        if prev is None:
            break
        u, e = prev
        steps.append((u, e, v))
        v = u
    steps.reverse()
    return steps


def fundamental_cycles(g: Multigraph, o: Orientation, forest: SpanningForest) -> CycleBasis:
    """One cycle per non-tree edge: the edge plus the forest path closing it.

    Tree edges are signed by traversal direction against the reference
    orientation, which makes every cycle lie in the kernel of the boundary.
    """
    adjacency: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.vertex_count)}
    for e in forest.tree_edges:
        a, b = g.edge_ends(e)
        adjacency[a].append((e, b))
        adjacency[b].append((e, a))
    non_tree = tuple(e for e in range(g.edge_count) if e not in forest.tree_edges)
    cycles: list[tuple[int, ...]] = []
    for e in non_tree:
        tail_v = g.endpoint[o.tail[e]]
        head_v = g.endpoint[o.head(e)]
        coeff = [0] * g.edge_count
        coeff[e] = 1
        for u, f, _w in _tree_path(adjacency, head_v, tail_v):
            coeff[f] = 1 if g.endpoint[o.tail[f]] == u else -1
        cycles.append(tuple(coeff))
    return CycleBasis(forest, non_tree, tuple(cycles))


def induced_cycle_matrix(
    g: Multigraph, o: Orientation, basis: CycleBasis, a: Automorphism
) -> IntMatrix:
    """Matrix of the signed edge action on the fundamental-cycle basis.

    Column j holds the coordinates of the image of basis cycle j, read off as
    the image's non-tree-edge coefficients.
    """
    dim = len(basis.cycles)
    if any(len(z) != g.edge_count for z in basis.cycles):
        raise ValueError("cycle basis does not match the graph")
    sep = induced_signed_edge_perm(g, o, a)
    flat = [0] * (dim * dim)
    for j, z in enumerate(basis.cycles):
        image = [0] * g.edge_count
        for e, c in enumerate(z):
            if c:
                image[sep.edge_perm[e]] = c * sep.edge_sign[e]
        for i, f in enumerate(basis.non_tree_edges):
            flat[i * dim + j] = image[f]
    return IntMatrix(dim, dim, tuple(flat))


def det_bareiss(m: IntMatrix) -> int:
    """Exact determinant by fraction-free elimination; 0x0 gives 1."""
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_cofactor(m: IntMatrix) -> int:
    """Reference determinant by first-row cofactor expansion.

    Exponential; meant only as an independent cross-check for det_bareiss on
    small matrices.
    """
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")

    def expand(rows: list[tuple[int, ...]]) -> int:
        n = len(rows)
        if n == 0:
            return 1
        if n == 1:
            return rows[0][0]
        total = 0
        for j, x in enumerate(rows[0]):
            if x:
                minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
                term = x * expand(minor)
                total += -term if j % 2 else term
        return total

    return expand([m.row(i) for i in range(m.rows)])


def det_sign(m: IntMatrix, require_unimodular: bool = False) -> int:
    """Sign of the exact determinant: -1, 0, or +1.

    With ``require_unimodular`` (the cycle-space pathway), a determinant other
    than +-1 raises UnimodularityError instead of being reported.
    """
    d = det_bareiss(m)
    if require_unimodular and d not in (1, -1):
        raise UnimodularityError(f"expected determinant +-1, got {d}")
    return (d > 0) - (d < 0)
