"""Connectivity-flavoured reference oracles: subgraph connectivity under
vertex toggles, batched d-failure connectivity, and directed reachability."""

from __future__ import annotations

from typing import Optional

from .base import CountedOracle, OracleError
from .graphs import DynGraph, bfs_dist


class SubgraphConnectivityOracle(CountedOracle):
    """Maintains an active vertex set S of a fixed graph; answers whether
    two vertices are connected in the induced subgraph G[S].  Queries run
    a fresh breadth-first search over active vertices."""

    def __init__(self, graph: DynGraph):
        super().__init__()
        self.graph = graph.copy()

    def turn_on(self, v: int) -> None:
        self.graph.check_vertex(v)
        self.graph.active[v] = True
        self._count_update()

    def turn_off(self, v: int) -> None:
        self.graph.check_vertex(v)
        self.graph.active[v] = False
        self._count_update()

    def is_on(self, v: int) -> bool:
        self.graph.check_vertex(v)
        return self.graph.active[v]

    def connected(self, s: int, t: int) -> bool:
        self.graph.check_vertex(s)
        self.graph.check_vertex(t)
        answer = False
        if self.graph.active[s] and self.graph.active[t]:
            if s == t:
                answer = True
            else:
                dist = bfs_dist(self.graph.adj, s, self.graph.active)
                answer = dist[t] is not None
        return self._count_query(answer)

    def connected_from(self, s: int, v: int) -> bool:
        """Single-source framing of the same connectivity question."""
        return self.connected(s, v)

    def _state(self):
        return list(self.graph.active)

    def _restore(self, state) -> None:
        self.graph.active = state


class DFailureOracle(CountedOracle):
    """One-batch-update connectivity: each update rolls the graph back to
    its original state and then removes up to `d` vertices at once."""

    def __init__(self, graph: DynGraph, d: int):
        super().__init__()
        if d < 0:
            raise OracleError("failure bound d must be >= 0")
        self.graph = graph.copy()
        self.d = d
        self.failed: set[int] = set()

    def fail_batch(self, vertices) -> None:
        batch = set(vertices)
        if len(batch) > self.d:
            raise OracleError(f"batch of {len(batch)} exceeds declared d={self.d}")
        for v in batch:
            self.graph.check_vertex(v)
        self.failed = batch
        self._count_update()

    def connected(self, s: int, t: int) -> bool:
        self.graph.check_vertex(s)
        self.graph.check_vertex(t)
        answer = False
        if s not in self.failed and t not in self.failed:
            if s == t:
                answer = True
            else:
                alive = [v not in self.failed for v in range(self.graph.n)]
                dist = bfs_dist(self.graph.adj, s, alive)
                answer = dist[t] is not None
        return self._count_query(answer)

    def _state(self):
        return set(self.failed)

    def _restore(self, state) -> None:
        self.failed = state


class TransitiveClosureOracle(CountedOracle):
    """Directed reachability under edge insertions/deletions, answered by
    a per-query directed breadth-first search."""

    def __init__(self, graph: DynGraph):
        super().__init__()
        if not graph.directed:
            raise OracleError("transitive closure oracle needs a directed graph")
        self.graph = graph.copy()

    def insert_edge(self, a: int, b: int) -> None:
        self.graph.add_edge(a, b)
        self._count_update()

    def delete_edge(self, a: int, b: int) -> None:
        self.graph.remove_edge(a, b)
        self._count_update()

    def reachable(self, u: int, v: int) -> bool:
        self.graph.check_vertex(u)
        self.graph.check_vertex(v)
        dist = bfs_dist(self.graph.adj, u)
        return self._count_query(dist[v] is not None)

    def _state(self):
        return ([set(s) for s in self.graph.adj],
                [set(s) for s in self.graph.radj],
                dict(self.graph.weights))

    def _restore(self, state) -> None:
        self.graph.adj, self.graph.radj, self.graph.weights = state
