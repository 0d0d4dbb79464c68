"""Connected-component decomposition and per-component structural predicates."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .graph import PoeGraph


@dataclass
class Component:
    """A maximal connected set of vertices of a parent PoeGraph.

    Vertex indices refer to the parent graph; the induced adjacency and the
    derived predicates are computed lazily and cached.
    """

    graph: PoeGraph
    vertices: np.ndarray  # sorted parent indices
    index: int = 0
    _adj: np.ndarray = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @cached_property
    def induced_adjacency(self) -> np.ndarray:
        if self._adj is None:
            sub = self.graph.adjacency[np.ix_(self.vertices, self.vertices)]
            sub.setflags(write=False)
            object.__setattr__(self, "_adj", sub)
        return self._adj

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.induced_adjacency.sum(axis=1, dtype=np.int64)

    @cached_property
    def regularity(self) -> int | None:
        degs = self.degrees
        first = int(degs[0]) if len(degs) else 0
        return first if bool((degs == first).all()) else None

    @cached_property
    def order_profile(self) -> Counter:
        """Multiset of element orders over the component's vertices."""
        return Counter(int(o) for o in self.graph.order_cache[self.vertices])

    @cached_property
    def n_edges(self) -> int:
        return int(self.induced_adjacency.sum()) // 2

    @cached_property
    def bipartition(self) -> tuple[frozenset, frozenset] | None:
        """A proper 2-coloring (as local index sets), or None if odd cycle."""
        adj = self.induced_adjacency
        n = self.size
        color = np.full(n, -1, dtype=np.int64)
        for start in range(n):
            if color[start] >= 0:
                continue
            color[start] = 0
            frontier = [start]
            while frontier:
                nxt = []
                for u in frontier:
                    for v in np.flatnonzero(adj[u]):
                        if color[v] < 0:
                            color[v] = 1 - color[u]
                            nxt.append(int(v))
                        elif color[v] == color[u]:
                            return None
                frontier = nxt
        return (
            frozenset(np.flatnonzero(color == 0).tolist()),
            frozenset(np.flatnonzero(color == 1).tolist()),
        )

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    @cached_property
    def has_triangle(self) -> bool:
        adj = self.induced_adjacency
        for u in range(self.size):
            row = adj[u]
            for v in np.flatnonzero(row):
                if v <= u:
                    continue
                if bool((row & adj[v]).any()):
                    return True
        return False

    def labels(self) -> list:
        return [self.graph.vertex_labels[v] for v in self.vertices]

    def contains_identity(self) -> bool:
        e = self.graph.group.identity()
        return self.graph.vertex_index(e) in set(self.vertices.tolist())


def connected_components(graph: PoeGraph) -> list[Component]:
    """BFS partition into components, ordered by smallest vertex index."""
    n = graph.n_vertices
    adj = graph.adjacency
    unseen = np.ones(n, dtype=bool)
    comps = []
    for s in range(n):
        if not unseen[s]:
            continue
        members = np.zeros(n, dtype=bool)
        members[s] = True
        frontier = members.copy()
        while frontier.any():
            reach = adj[frontier].any(axis=0)
            frontier = reach & ~members
            members |= frontier
        unseen &= ~members
        comps.append(Component(graph, np.flatnonzero(members), index=len(comps)))
    return comps


def distance(graph: PoeGraph, x: int, y: int) -> int | None:
    """BFS shortest-path length between vertices, None if disconnected."""
    graph._check_vertex(x)
    graph._check_vertex(y)
    if x == y:
        return 0
    adj = graph.adjacency
    n = graph.n_vertices
    seen = np.zeros(n, dtype=bool)
    seen[x] = True
    frontier = seen.copy()
    d = 0
    while frontier.any():
        d += 1
        frontier = adj[frontier].any(axis=0) & ~seen
        if frontier[y]:
            return d
        seen |= frontier
    return None


def is_bipartite(component: Component):
    return component.bipartition


def has_triangle(component: Component) -> bool:
    return component.has_triangle
