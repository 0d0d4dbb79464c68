"""Equitable vertex partitions and quotient matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import intpoly
from .charpoly import char_poly
from .errors import InputError


@dataclass(frozen=True)
class Partition:
    """Vertex partition: cell index per vertex plus the cells themselves."""

    cell_of: tuple[int, ...]
    cells: tuple[tuple[int, ...], ...]

    @property
    def n_cells(self) -> int:
        return len(self.cells)

    @property
    def n_vertices(self) -> int:
        return len(self.cell_of)

    @staticmethod
    def from_cells(cells, n_vertices: int) -> "Partition":
        cell_of = [-1] * n_vertices
        norm = []
        for idx, cell in enumerate(cells):
            members = tuple(sorted(int(v) for v in cell))
            if not members:
                raise InputError("partition cells must be non-empty")
            for v in members:
                if not 0 <= v < n_vertices:
                    raise InputError(f"vertex {v} out of range")
                if cell_of[v] != -1:
                    raise InputError(f"vertex {v} appears in two cells")
                cell_of[v] = idx
            norm.append(members)
        if any(c == -1 for c in cell_of):
            missing = cell_of.index(-1)
            raise InputError(f"vertex {missing} is not covered by the partition")
        return Partition(tuple(cell_of), tuple(norm))

    @staticmethod
    def discrete(n_vertices: int) -> "Partition":
        return Partition.from_cells([(v,) for v in range(n_vertices)], n_vertices)


@dataclass(frozen=True)
class EquitableCheck:
    """Outcome of verifying a partition: a quotient matrix or a witness."""

    quotient: np.ndarray | None
    witness: tuple[int, int] | None = None  # (vertex, target cell) violating constancy

    @property
    def is_equitable(self) -> bool:
        return self.quotient is not None


def _adjacency_of(graph_or_matrix) -> np.ndarray:
    adj = getattr(graph_or_matrix, "adjacency", graph_or_matrix)
    a = np.asarray(adj).astype(bool)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError("adjacency must be a square matrix")
    return a


def verify_equitable(graph_or_matrix, partition: Partition) -> EquitableCheck:
    """Quotient matrix if every cell pair has constant neighbor counts."""
    adj = _adjacency_of(graph_or_matrix)
    n = adj.shape[0]
    if partition.n_vertices != n:
        raise InputError("partition does not cover the vertex set")
    m = partition.n_cells
    cell_of = np.asarray(partition.cell_of, dtype=np.int64)
    quotient = np.zeros((m, m), dtype=np.int64)
    for i, cell in enumerate(partition.cells):
        counts = np.zeros((len(cell), m), dtype=np.int64)
        for row, v in enumerate(cell):
            np.add.at(counts[row], cell_of[np.flatnonzero(adj[v])], 1)
        first = counts[0]
        diff = counts != first[None, :]
        if diff.any():
            row, col = np.argwhere(diff)[0]
            return EquitableCheck(None, witness=(int(cell[row]), int(col)))
        quotient[i] = first
    quotient.setflags(write=False)
    return EquitableCheck(quotient)


def coarsest_equitable_partition(graph_or_matrix) -> Partition:
    """Iterative refinement from the single-cell partition to stability.

    Cells are numbered by their smallest contained vertex, so the result is
    deterministic.
    """
    adj = _adjacency_of(graph_or_matrix)
    n = adj.shape[0]
    colors = np.zeros(n, dtype=np.int64)
    while True:
        n_colors = int(colors.max()) + 1 if n else 0
        counts = np.zeros((n, n_colors), dtype=np.int64)
        for v in range(n):
            np.add.at(counts[v], colors[np.flatnonzero(adj[v])], 1)
        signatures = [(int(colors[v]), tuple(counts[v].tolist())) for v in range(n)]
        first_seen: dict = {}
        for v in range(n):
            first_seen.setdefault(signatures[v], v)
        ordered = sorted(first_seen, key=first_seen.get)
        relabel = {sig: i for i, sig in enumerate(ordered)}
        new = np.array([relabel[signatures[v]] for v in range(n)], dtype=np.int64)
        if (new == colors).all():
            break
        colors = new
    cells = [[] for _ in range(int(colors.max()) + 1 if n else 0)]
    for v in range(n):
        cells[colors[v]].append(v)
    return Partition.from_cells(cells, n)


def quotient_divides(graph_or_matrix, partition: Partition):
    """Exact divisibility of the graph char poly by the quotient char poly.

    Returns (divides, graph_poly_monic, quotient_poly_monic).
    """
    adj = _adjacency_of(graph_or_matrix)
    check = verify_equitable(adj, partition)
    if not check.is_equitable:
        raise InputError(f"partition is not equitable, witness {check.witness}")
    graph_poly = char_poly(adj.astype(np.int64)).monic()
    quot_poly = char_poly(check.quotient).monic()
    return intpoly.divides_exactly(graph_poly, quot_poly), graph_poly, quot_poly
