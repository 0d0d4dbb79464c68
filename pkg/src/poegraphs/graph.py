"""POE graph construction: vertices are group elements, edges join distinct
x, y whenever the composed element xy has prime order."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._kernels import build_adjacency
from .errors import InputError
from .groups import Element, GroupSpec
from .primes import is_prime, prime_flags

ENUMERATION = "enumeration"
INVERSE_PAIRED = "inverse-paired"


@dataclass(frozen=True)
class PoeGraph:
    """Immutable POE graph over all elements of a finite Abelian group."""

    group: GroupSpec
    vertex_labels: tuple[Element, ...]
    adjacency: np.ndarray  # (n, n) bool, symmetric, zero diagonal
    order_cache: np.ndarray  # (n,) int64 element orders
    ordering: str = ENUMERATION
    _index: dict[Element, int] = field(repr=False, default=None)

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_labels)

    def vertex_index(self, x: Element) -> int:
        return self._index[x]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.adjacency[v].sum())

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1, dtype=np.int64)

    def n_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def neighbors(self, v: int) -> np.ndarray:
        self._check_vertex(v)
        return np.flatnonzero(self.adjacency[v])

    def edge_prime_label(self, u: int, v: int) -> int | None:
        """The prime o(uv) if the edge exists, else None."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise InputError("edge labels are defined for distinct vertices")
        if not self.adjacency[u, v]:
            return None
        composed = self.group.compose(self.vertex_labels[u], self.vertex_labels[v])
        return self.group.element_order(composed)

    def edges(self):
        """Yield (u, v, prime) for every edge with u < v."""
        iu, iv = np.nonzero(np.triu(self.adjacency, k=1))
        for u, v in zip(iu.tolist(), iv.tolist()):
            yield u, v, self.edge_prime_label(u, v)

    def adjacency_matrix(self) -> np.ndarray:
        """0/1 integer adjacency matrix under this graph's vertex ordering."""
        return self.adjacency.astype(np.int64)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n_vertices:
            raise InputError(f"vertex index {v} out of range")


def build_poe_graph(g: GroupSpec, ordering: str = ENUMERATION, backend=None) -> PoeGraph:
    """Construct the POE graph of g with a deterministic vertex ordering."""
    if ordering == ENUMERATION:
        labels = g.enumerate_elements()
    elif ordering == INVERSE_PAIRED:
        labels = g.inverse_paired_ordering()
    else:
        raise InputError(f"unknown ordering {ordering!r}")
    coords = np.array(labels, dtype=np.int64).reshape(len(labels), g.rank)
    mask = prime_flags(g.exponent)
    adj = build_adjacency(coords, np.array(g.factors, dtype=np.int64), mask, backend=backend)
    adj.setflags(write=False)
    orders = np.ones(len(labels), dtype=np.int64)
    for t, n in enumerate(g.factors):
        table = n // np.gcd(np.arange(n, dtype=np.int64), n)
        o_t = table[coords[:, t]]
        orders = orders // np.gcd(orders, o_t) * o_t
    orders.setflags(write=False)
    graph = PoeGraph(
        group=g,
        vertex_labels=tuple(labels),
        adjacency=adj,
        order_cache=orders,
        ordering=ordering,
        _index={x: i for i, x in enumerate(labels)},
    )
    return graph


def poe_adjacent(g: GroupSpec, x: Element, y: Element) -> bool:
    """Direct edge predicate, independent of any built graph."""
    if x == y:
        return False
    return is_prime(g.element_order(g.compose(x, y)))
