"""Bounded graph isomorphism for the small component-vs-reference checks.

Invariant prefilters (size, degree sequence, char poly) settle most pairs;
the remaining ones go through color-refinement-pruned backtracking with an
explicit search budget.  Running out of budget is reported as indeterminate,
never as "not isomorphic".
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .charpoly import char_poly
from .errors import InputError

DEFAULT_VERTEX_CAP = 64
DEFAULT_NODE_BUDGET = 200_000

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not-isomorphic"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class IsoResult:
    status: str
    mapping: tuple[int, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status == ISOMORPHIC


def _as_bool_matrix(adj) -> np.ndarray:
    a = np.asarray(adj).astype(bool)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError("adjacency must be a square matrix")
    return a


def check_mapping(a, b, mapping) -> bool:
    """Does the vertex bijection preserve adjacency in both directions?"""
    a = _as_bool_matrix(a)
    b = _as_bool_matrix(b)
    perm = np.asarray(mapping, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(a.shape[0])):
        return False
    return bool((b[np.ix_(perm, perm)] == a).all())


def _refine_colors(adj, colors):
    """1-dimensional color refinement until stable; returns canonical colors."""
    n = adj.shape[0]
    colors = list(colors)
    while True:
        signatures = []
        for v in range(n):
            neigh = Counter(colors[u] for u in np.flatnonzero(adj[v]))
            signatures.append((colors[v], tuple(sorted(neigh.items()))))
        mapping = {}
        for sig in sorted(set(signatures)):
            mapping[sig] = len(mapping)
        new = [mapping[s] for s in signatures]
        if new == colors:
            return colors
        colors = new


def graphs_isomorphic(
    a,
    b,
    budget: int = DEFAULT_NODE_BUDGET,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    hint=None,
) -> IsoResult:
    """Decide isomorphism of two small graphs.

    ``hint`` is an optional candidate mapping (a -> b vertex indices) that is
    verified before any search; constructive hints from group theory settle
    the component-isomorphism claims without searching at all.
    """
    a = _as_bool_matrix(a)
    b = _as_bool_matrix(b)
    if a.shape[0] != b.shape[0]:
        return IsoResult(NOT_ISOMORPHIC, reason="sizes differ")
    n = a.shape[0]

    if hint is not None and check_mapping(a, b, hint):
        return IsoResult(ISOMORPHIC, tuple(int(v) for v in hint), reason="hint verified")

    deg_a = a.sum(axis=1)
    deg_b = b.sum(axis=1)
    if sorted(deg_a.tolist()) != sorted(deg_b.tolist()):
        return IsoResult(NOT_ISOMORPHIC, reason="degree sequences differ")

    # complete and empty graphs: any degree-respecting bijection works
    if (deg_a == n - 1).all() or (deg_a == 0).all():
        return IsoResult(ISOMORPHIC, tuple(range(n)), reason="trivial structure")
    # disjoint-K2-plus-isolated-vertices graphs: match pairs directly
    if deg_a.max() <= 1:
        map_out = [-1] * n
        pairs_b = iter([v for v in range(n) if deg_b[v] == 1])
        singles_b = iter([v for v in range(n) if deg_b[v] == 0])
        for u in range(n):
            if map_out[u] >= 0:
                continue
            if deg_a[u] == 0:
                map_out[u] = next(singles_b)
            else:
                vb = next(pairs_b)
                map_out[u] = vb
                partner_a = int(np.flatnonzero(a[u])[0])
                map_out[partner_a] = int(np.flatnonzero(b[vb])[0])
        return IsoResult(ISOMORPHIC, tuple(map_out), reason="matching structure")

    if n > vertex_cap:
        return IsoResult(
            INDETERMINATE, reason=f"graph size {n} exceeds the {vertex_cap}-vertex cap"
        )

    pa = char_poly(a.astype(np.int64))
    pb = char_poly(b.astype(np.int64))
    if pa.coefficients != pb.coefficients:
        return IsoResult(NOT_ISOMORPHIC, reason="characteristic polynomials differ")

    colors_a = _refine_colors(a, [0] * n)
    colors_b = _refine_colors(b, [0] * n)
    if sorted(Counter(colors_a).items()) != sorted(Counter(colors_b).items()):
        return IsoResult(NOT_ISOMORPHIC, reason="refinement color classes differ")

    by_color_b = {}
    for v in range(n):
        by_color_b.setdefault(colors_b[v], []).append(v)

    # map high-degree, rare-color vertices first
    order = sorted(range(n), key=lambda v: (Counter(colors_a)[colors_a[v]], -deg_a[v]))
    mapping = [-1] * n
    used = [False] * n
    nodes = 0

    def backtrack(pos: int) -> bool | None:
        nonlocal nodes
        if pos == n:
            return True
        u = order[pos]
        for v in by_color_b.get(colors_a[u], []):
            if used[v]:
                continue
            nodes += 1
            if nodes > budget:
                return None
            ok = True
            for w in order[:pos]:
                if a[u, w] != b[v, mapping[w]]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = v
            used[v] = True
            result = backtrack(pos + 1)
            if result:
                return True
            used[v] = False
            mapping[u] = -1
            if result is None:
                return None
        return False

    outcome = backtrack(0)
    if outcome is None:
        return IsoResult(INDETERMINATE, reason=f"search budget {budget} exhausted")
    if outcome:
        return IsoResult(ISOMORPHIC, tuple(mapping), reason="backtracking search")
    return IsoResult(NOT_ISOMORPHIC, reason="exhaustive search found no mapping")
