"""Distance-flavoured reference oracles: dynamic hop distances, a
decremental single-source structure, color distances, triangles, and the
0/1-weighted diameter."""

from __future__ import annotations

from collections import deque
from typing import Optional

from .base import CountedOracle, OracleError
from .graphs import DynGraph, bfs_dist

INF = float("inf")


class DistanceOracle(CountedOracle):
    """Exact hop distance on an unweighted undirected dynamic graph,
    recomputed by breadth-first search at every query.  `None` encodes an
    unreachable target."""

    def __init__(self, graph: DynGraph):
        super().__init__()
        self.graph = graph.copy()

    def insert_edge(self, a: int, b: int) -> None:
        self.graph.add_edge(a, b)
        self._count_update()

    def delete_edge(self, a: int, b: int) -> None:
        self.graph.remove_edge(a, b)
        self._count_update()

    def dist(self, s: int, t: int) -> Optional[int]:
        self.graph.check_vertex(s)
        self.graph.check_vertex(t)
        return self._count_query(bfs_dist(self.graph.adj, s)[t])

    def _state(self):
        return ([set(s) for s in self.graph.adj], dict(self.graph.weights))

    def _restore(self, state) -> None:
        self.graph.adj, self.graph.weights = state


class EvenShiloachOracle(CountedOracle):
    """Decremental single-source distances: levels start at BFS depth and
    only ever increase as edges are deleted; queries are O(1) reads."""

    def __init__(self, graph: DynGraph, source: int):
        super().__init__()
        if graph.directed:
            raise OracleError("decremental distance structure needs an undirected graph")
        graph.check_vertex(source)
        self.graph = graph.copy()
        self.source = source
        n = graph.n
        self.level: list[float] = [INF] * n
        for v, d in enumerate(bfs_dist(self.graph.adj, source)):
            if d is not None:
                self.level[v] = d

    def insert_edge(self, a: int, b: int) -> None:
        raise OracleError("insertions violate the decremental contract")

    def delete_edge(self, a: int, b: int) -> None:
        self.graph.remove_edge(a, b)
        self._count_update()
        self._settle([a, b])

    def _has_support(self, v: int) -> bool:
        lv = self.level[v]
        return any(self.level[w] == lv - 1 for w in self.graph.adj[v])

    def _settle(self, seeds: list[int]) -> None:
        # raise levels until every non-source vertex again has a neighbor
        # one level below it; levels are monotone non-decreasing
        queue = deque(seeds)
        pending = set(seeds)
        while queue:
            v = queue.popleft()
            pending.discard(v)
            if v == self.source or self.level[v] == INF:
                continue
            if self._has_support(v):
                continue
            self.level[v] += 1
            if self.level[v] > self.graph.n:
                self.level[v] = INF
            for w in self.graph.adj[v]:
                if w not in pending:
                    pending.add(w)
                    queue.append(w)
            if self.level[v] != INF and v not in pending:
                pending.add(v)
                queue.append(v)

    def dist(self, v: int) -> Optional[int]:
        self.graph.check_vertex(v)
        lv = self.level[v]
        return self._count_query(None if lv == INF else int(lv))

    def _state(self):
        return ([set(s) for s in self.graph.adj], dict(self.graph.weights), list(self.level))

    def _restore(self, state) -> None:
        self.graph.adj, self.graph.weights, self.level = state


class ColorDistanceOracle(CountedOracle):
    """Distance from a vertex to the nearest vertex of a given color,
    under vertex recoloring; answered by breadth-first search."""

    def __init__(self, graph: DynGraph, colors: Optional[list[int]] = None):
        super().__init__()
        self.graph = graph.copy()
        if colors is not None:
            if len(colors) != graph.n:
                raise OracleError("one color per vertex required")
            self.graph.colors = list(colors)

    def set_color(self, v: int, color: int) -> None:
        self.graph.check_vertex(v)
        self.graph.colors[v] = color
        self._count_update()

    def color_of(self, v: int) -> int:
        self.graph.check_vertex(v)
        return self.graph.colors[v]

    def dist_to_color(self, s: int, color: int) -> Optional[int]:
        self.graph.check_vertex(s)
        dist = bfs_dist(self.graph.adj, s)
        best = None
        for v, d in enumerate(dist):
            if d is not None and self.graph.colors[v] == color:
                if best is None or d < best:
                    best = d
        return self._count_query(best)

    def _state(self):
        return list(self.graph.colors)

    def _restore(self, state) -> None:
        self.graph.colors = state


class TriangleOracle(CountedOracle):
    """Triangle existence (globally or through a fixed vertex) under edge
    insertions/deletions, by scanning edges among neighborhoods."""

    def __init__(self, graph: DynGraph):
        super().__init__()
        self.graph = graph.copy()

    def insert_edge(self, a: int, b: int) -> None:
        self.graph.add_edge(a, b)
        self._count_update()

    def delete_edge(self, a: int, b: int) -> None:
        self.graph.remove_edge(a, b)
        self._count_update()

    def _triangle_at(self, s: int) -> bool:
        adj_s = self.graph.adj[s]
        for u in adj_s:
            if adj_s & self.graph.adj[u]:
                return True
        return False

    def has_triangle_at(self, s: int) -> bool:
        self.graph.check_vertex(s)
        return self._count_query(self._triangle_at(s))

    def has_triangle(self) -> bool:
        found = False
        for a, b, _ in self.graph.edges():
            if self.graph.adj[a] & self.graph.adj[b]:
                found = True
                break
        return self._count_query(found)

    def scan_triangle_uncounted(self) -> bool:
        """Validation helper outside the counted query surface."""
        return any(self.graph.adj[a] & self.graph.adj[b] for a, b, _ in self.graph.edges())

    def _state(self):
        return ([set(s) for s in self.graph.adj], dict(self.graph.weights))

    def _restore(self, state) -> None:
        self.graph.adj, self.graph.weights = state


def zero_one_bfs(graph: DynGraph, source: int) -> list[float]:
    """Deque-based shortest paths when every edge weighs 0 or 1."""
    dist = [INF] * graph.n
    dist[source] = 0
    dq = deque([source])
    while dq:
        u = dq.popleft()
        du = dist[u]
        for w in graph.adj[u]:
            nd = du + graph.weight(u, w)
            if nd < dist[w]:
                dist[w] = nd
                if nd == du:
                    dq.appendleft(w)
                else:
                    dq.append(w)
    return dist


class DiameterOracle(CountedOracle):
    """Diameter of a {0,1}-weighted undirected graph under edge updates:
    all-pairs 0-1 breadth-first search, maximum eccentricity.  `None`
    encodes a disconnected graph."""

    def __init__(self, graph: DynGraph):
        super().__init__()
        self.graph = graph.copy()

    def insert_edge(self, a: int, b: int, weight: int = 1) -> None:
        self.graph.add_edge(a, b, weight)
        self._count_update()

    def delete_edge(self, a: int, b: int) -> None:
        self.graph.remove_edge(a, b)
        self._count_update()

    def diameter(self) -> Optional[int]:
        best = 0
        disconnected = False
        for s in range(self.graph.n):
            dist = zero_one_bfs(self.graph, s)
            ecc = max(dist)
            if ecc == INF:
                disconnected = True
                break
            best = max(best, int(ecc))
        return self._count_query(None if disconnected else best)

    def _state(self):
        return ([set(s) for s in self.graph.adj], dict(self.graph.weights))

    def _restore(self, state) -> None:
        self.graph.adj, self.graph.weights = state
