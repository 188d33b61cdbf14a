"""Exact densest-subgraph density via binary search over candidate
densities with a maximum-flow feasibility test.

Two distinct subgraph densities |E(S)|/|S| with |S| <= n differ by at
least 1/(n(n-1)), so the search terminates with the exact answer once the
bracket is that narrow; the reported density is recomputed from the
witness set, never from the bracket.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .base import CountedOracle, OracleError
from .graphs import DynGraph

_INT32_LIMIT = 2**31 - 1


def _denser_than(graph: DynGraph, g: Fraction) -> frozenset[int] | None:
    """A vertex set S with |E(S)|/|S| > g, or None if none exists.

    Flow network: source -> v with capacity deg(v), v -> sink with
    capacity 2g, both directions of each edge with capacity 1, all scaled
    by the denominator of g; min cut < 2m*scale iff some S beats g.
    """
    n = graph.n
    m = graph.edge_count()
    scale = g.denominator
    if 2 * m * scale > _INT32_LIMIT:
        raise OracleError("flow capacities would overflow the int32 solver")
    source, sink = n, n + 1
    rows, cols, caps = [], [], []
    for v in range(n):
        deg = len(graph.adj[v])
        if deg:
            rows.append(source)
            cols.append(v)
            caps.append(deg * scale)
        rows.append(v)
        cols.append(sink)
        caps.append(2 * g.numerator)
    for a, b, _ in graph.edges():
        rows.extend((a, b))
        cols.extend((b, a))
        caps.extend((scale, scale))
    capacity = csr_matrix(
        (np.asarray(caps, dtype=np.int32), (np.asarray(rows), np.asarray(cols))),
        shape=(n + 2, n + 2),
    )
    result = maximum_flow(capacity, source, sink)
    if result.flow_value >= 2 * m * scale:
        return None
    residual = capacity - result.flow
    reached = {source}
    stack = [source]
    indptr, indices, data = residual.indptr, residual.indices, residual.data
    while stack:
        u = stack.pop()
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if data[k] > 0 and w not in reached:
                reached.add(w)
                stack.append(w)
    witness = frozenset(int(v) for v in reached if v < n)
    if not witness:
        return None
    return witness


def subset_density(graph: DynGraph, subset) -> Fraction:
    s = set(subset)
    if not s:
        raise OracleError("density of the empty set is undefined")
    edges = sum(1 for a, b, _ in graph.edges() if a in s and b in s)
    return Fraction(edges, len(s))


def densest_subgraph_exact(graph: DynGraph) -> tuple[Fraction, frozenset[int]]:
    """(max over nonempty S of |E(S)|/|S|, a witness set attaining it)."""
    if graph.directed:
        raise OracleError("densest subgraph is defined on undirected graphs")
    n = graph.n
    m = graph.edge_count()
    if m == 0:
        return Fraction(0), frozenset({0})
    # rho(S) <= min(m/|S|, (|S|-1)/2) <= sqrt(m/2); the bracket shrinks to
    # below the minimum spacing of distinct densities
    lo = Fraction(0)
    hi = Fraction(math.isqrt(2 * m) + 2, 2)
    eps = Fraction(1, n * (n - 1)) if n > 1 else Fraction(1)
    witness: frozenset[int] | None = None
    while hi - lo > eps:
        mid = (lo + hi) / 2
        found = _denser_than(graph, mid)
        if found is not None:
            lo = mid
            witness = found
        else:
            hi = mid
    if witness is None:
        # m >= 1 guarantees feasibility below 1/2, so this cannot happen
        raise OracleError("density search failed to find a witness")
    return subset_density(graph, witness), witness


class DensestSubgraphOracle(CountedOracle):
    """Maximum subgraph density under edge insertions/deletions."""

    def __init__(self, graph: DynGraph):
        super().__init__()
        if graph.directed:
            raise OracleError("densest subgraph is defined on undirected graphs")
        self.graph = graph.copy()

    def insert_edge(self, a: int, b: int) -> None:
        self.graph.add_edge(a, b)
        self._count_update()

    def delete_edge(self, a: int, b: int) -> None:
        self.graph.remove_edge(a, b)
        self._count_update()

    def density(self) -> Fraction:
        best, _ = densest_subgraph_exact(self.graph)
        return self._count_query(best)

    def densest(self) -> tuple[Fraction, frozenset[int]]:
        best, witness = densest_subgraph_exact(self.graph)
        return self._count_query(best), witness

    def _state(self):
        return ([set(s) for s in self.graph.adj], dict(self.graph.weights))

    def _restore(self, state) -> None:
        self.graph.adj, self.graph.weights = state
