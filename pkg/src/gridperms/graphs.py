"""Row-column graphs, cell graphs, cycle signs, and sign assignments.

The row-column graph of a t x u matrix is bipartite on column vertices
("x", 1..t) and row vertices ("y", 1..u), with a signed edge per nonzero
cell.  A matrix factors as column sign times row sign on its nonzero cells
exactly when this graph has no negative cycle; ``find_signs`` computes such
a factorization or produces a negative cycle as a witness.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .matrices import Cell, GridMatrix

Vertex = tuple[str, int]  # ("x", k) for columns, ("y", l) for rows


class NotPartialMultiplicationError(Exception):
    """No sign assignment exists; ``cycle`` is a witness negative cycle."""

    def __init__(self, cycle: tuple[Vertex, ...]):
        super().__init__(f"negative cycle {' '.join(f'{s}{i}' for s, i in cycle)}")
        self.cycle = cycle


@dataclass(frozen=True)
class RowColumnGraph:
    """Bipartite graph with one vertex per column and per row.

    Edges are (x-vertex, y-vertex, sign) triples, one per nonzero cell.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[Vertex, Vertex, int], ...]


@dataclass(frozen=True)
class CellGraph:
    """Graph on the nonzero cells of a matrix.

    Two cells are adjacent when they share a row or a column with no nonzero
    cell strictly between them.  ``labels[i]`` is the matrix entry of
    ``vertices[i]``.
    """

    vertices: tuple[Cell, ...]
    labels: tuple[int, ...]
    edges: tuple[tuple[Cell, Cell], ...]

    def label(self, cell: Cell) -> int:
        return self.labels[self.vertices.index(cell)]


@dataclass(frozen=True)
class SignAssignment:
    """Column signs c_1..c_t and row signs r_1..r_u, all +-1."""

    col_signs: tuple[int, ...]
    row_signs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "col_signs", tuple(self.col_signs))
        object.__setattr__(self, "row_signs", tuple(self.row_signs))
        if any(s not in (1, -1) for s in self.col_signs + self.row_signs):
            raise ValueError("signs must be +1 or -1")

    def verify(self, matrix: GridMatrix) -> bool:
        """Whether every nonzero entry (k, l) equals c_k * r_l."""
        if len(self.col_signs) != matrix.t or len(self.row_signs) != matrix.u:
            return False
        return all(
            matrix.entry(k, l) in (0, self.col_signs[k - 1] * self.row_signs[l - 1])
            for k in range(1, matrix.t + 1)
            for l in range(1, matrix.u + 1)
        )


def row_column_graph(matrix: GridMatrix) -> RowColumnGraph:
    """The signed bipartite graph with an edge {x_k, y_l} per nonzero cell."""
    vertices = tuple(("x", k) for k in range(1, matrix.t + 1)) + tuple(
        ("y", l) for l in range(1, matrix.u + 1)
    )
    edges = tuple(
        (("x", k), ("y", l), matrix.entry(k, l)) for k, l in matrix.nonzero_cells()
    )
    return RowColumnGraph(vertices, edges)


def cell_graph(matrix: GridMatrix) -> CellGraph:
    """The graph on nonzero cells, adjacent along rows/columns with nothing
    nonzero in between (i.e. consecutive nonzero cells of a line)."""
    cells = matrix.nonzero_cells()
    labels = tuple(matrix.entry(k, l) for k, l in cells)
    edges = []
    for l in range(1, matrix.u + 1):
        in_row = [c for c in cells if c[1] == l]
        edges.extend(zip(in_row, in_row[1:]))
    for k in range(1, matrix.t + 1):
        in_col = sorted(c for c in cells if c[0] == k)
        edges.extend(zip(in_col, in_col[1:]))
    return CellGraph(cells, labels, tuple(edges))


def is_forest(graph: RowColumnGraph | CellGraph) -> bool:
    """Whether the graph is acyclic (union-find over its edges)."""
    parent = {v: v for v in graph.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for edge in graph.edges:
        a, b = find(edge[0]), find(edge[1])
        if a == b:
            return False
        parent[a] = b
    return True


def _normalize_cycle(cycle: Sequence[Vertex]) -> tuple[Vertex, ...]:
    vertices = tuple(tuple(v) for v in cycle)
    if len(vertices) >= 2 and vertices[0] == vertices[-1]:
        vertices = vertices[:-1]
    return vertices


def cycle_sign(matrix: GridMatrix, cycle: Sequence[Vertex]) -> int:
    """Product of the edge signs around a cycle of the row-column graph.

    ``cycle`` is an alternating sequence of column/row vertices, e.g.
    ``[("x", 1), ("y", 1), ("x", 2), ("y", 2)]``; the closing edge from the
    last vertex back to the first is implied (repeating the first vertex at
    the end is also accepted).
    """
    vertices = _normalize_cycle(cycle)
    if len(vertices) < 4 or len(vertices) % 2 != 0:
        raise ValueError(f"not a cycle: {vertices} (need even length >= 4)")
    if len(set(vertices)) != len(vertices):
        raise ValueError(f"repeated vertex in cycle: {vertices}")
    sign = 1
    for (side_a, a), (side_b, b) in zip(vertices, vertices[1:] + vertices[:1]):
        if side_a == side_b or {side_a, side_b} != {"x", "y"}:
            raise ValueError("cycle must alternate between column and row vertices")
        k, l = (a, b) if side_a == "x" else (b, a)
        entry = matrix.entry(k, l)
        if entry == 0:
            raise ValueError(f"cycle uses the zero cell ({k}, {l})")
        sign *= entry
    return sign


def _conflict_cycle(
    v: Vertex, w: Vertex, parent: dict[Vertex, Vertex | None]
) -> tuple[Vertex, ...]:
    """Cycle through the tree paths of v and w plus the edge {v, w}."""
    ancestors = []
    a: Vertex | None = v
    while a is not None:
        ancestors.append(a)
        a = parent[a]
    ancestor_set = set(ancestors)
    path_w = []
    b: Vertex = w
    while b not in ancestor_set:
        path_w.append(b)
        b = parent[b]  # type: ignore[assignment]
    path_v = ancestors[: ancestors.index(b) + 1]  # v .. lca
    return tuple(path_v) + tuple(reversed(path_w))  # v .. lca .. w, closes at v


def find_signs(matrix: GridMatrix) -> SignAssignment:
    """Column and row signs with entry(k, l) in {0, c_k * r_l} for all cells.

    Works per connected component of the row-column graph: the least-indexed
    vertex (columns before rows, then by index) gets +1, and signs propagate
    along edges as sign(neighbor) = sign(vertex) * edge sign.  Isolated
    vertices get +1.  A propagation conflict means some cycle has negative
    sign, and the offending cycle is reported.

    Raises NotPartialMultiplicationError if no assignment exists.
    """
    graph = row_column_graph(matrix)
    adjacency: dict[Vertex, list[tuple[Vertex, int]]] = {v: [] for v in graph.vertices}
    for xv, yv, sign in graph.edges:
        adjacency[xv].append((yv, sign))
        adjacency[yv].append((xv, sign))

    signs: dict[Vertex, int] = {}
    parent: dict[Vertex, Vertex | None] = {}
    for root in graph.vertices:
        if root in signs:
            continue
        signs[root] = 1
        parent[root] = None
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, edge_sign in adjacency[v]:
                wanted = signs[v] * edge_sign
                if w not in signs:
                    signs[w] = wanted
                    parent[w] = v
                    queue.append(w)
                elif signs[w] != wanted:
                    raise NotPartialMultiplicationError(_conflict_cycle(v, w, parent))

    return SignAssignment(
        tuple(signs[("x", k)] for k in range(1, matrix.t + 1)),
        tuple(signs[("y", l)] for l in range(1, matrix.u + 1)),
    )


def has_negative_cycle(matrix: GridMatrix) -> bool:
    """Whether some cycle of the row-column graph has sign -1, i.e. whether
    no sign assignment exists."""
    try:
        find_signs(matrix)
    except NotPartialMultiplicationError:
        return True
    return False
