"""Maximum-matching size on dynamic bipartite graphs.

A single edge change moves the maximum by at most one, so after every
update the previous matching is repaired and one augmenting-path pass
restores maximality.
"""

from __future__ import annotations

from typing import Optional

from .base import CountedOracle, OracleError
from .graphs import DynGraph


def two_color(graph: DynGraph) -> list[int]:
    """0/1 sides of a bipartite graph; isolated vertices go to side 0."""
    side = [-1] * graph.n
    for start in range(graph.n):
        if side[start] != -1:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in graph.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    raise OracleError("graph is not bipartite")
    return side


class BipartiteMatchingOracle(CountedOracle):
    """Maximum-matching size under edge insertions/deletions on a graph
    whose vertices carry a fixed bipartition."""

    def __init__(self, graph: DynGraph, side: Optional[list[int]] = None):
        super().__init__()
        self.graph = graph.copy()
        self.side = list(side) if side is not None else two_color(graph)
        if len(self.side) != graph.n:
            raise OracleError("one side flag per vertex required")
        for a, b, _ in self.graph.edges():
            if self.side[a] == self.side[b]:
                raise OracleError(f"edge ({a}, {b}) stays within one side")
        self.mate: list[Optional[int]] = [None] * graph.n
        self._size = 0
        # greedy seeding, then augmenting passes to maximality
        for v in range(graph.n):
            if self.side[v] == 0 and self.mate[v] is None:
                for w in self.graph.adj[v]:
                    if self.mate[w] is None:
                        self.mate[v] = w
                        self.mate[w] = v
                        self._size += 1
                        break
        while self._augment_once():
            pass

    def insert_edge(self, a: int, b: int) -> None:
        if self.side[a] == self.side[b]:
            raise OracleError(f"edge ({a}, {b}) stays within one side")
        self.graph.add_edge(a, b)
        self._count_update()
        self._augment_once()

    def delete_edge(self, a: int, b: int) -> None:
        self.graph.remove_edge(a, b)
        self._count_update()
        if self.mate[a] == b:
            self.mate[a] = None
            self.mate[b] = None
            self._size -= 1
            self._augment_once()

    def matching_size(self) -> int:
        return self._count_query(self._size)

    def matching_size_uncounted(self) -> int:
        return self._size

    def _augment_once(self) -> bool:
        """One alternating-path search from every free left vertex; finds
        an augmenting path whenever one exists."""
        free_left = [v for v in range(self.graph.n)
                     if self.side[v] == 0 and self.mate[v] is None and self.graph.adj[v]]
        visited = [False] * self.graph.n
        for root in free_left:
            if self._try_augment(root, visited):
                self._size += 1
                return True
        return False

    def _try_augment(self, root: int, visited: list[bool]) -> bool:
        stack = [(root, iter(self.graph.adj[root]))]
        parent: dict[int, int] = {}
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                if visited[w]:
                    continue
                visited[w] = True
                parent[w] = u
                m = self.mate[w]
                if m is None:
                    # flip the path back to the root
                    right = w
                    while True:
                        left = parent[right]
                        nxt = self.mate[left]
                        self.mate[left] = right
                        self.mate[right] = left
                        if nxt is None:
                            return True
                        right = nxt
                visited[m] = True
                stack.append((m, iter(self.graph.adj[m])))
                advanced = True
                break
            if not advanced:
                stack.pop()
        return False

    def _state(self):
        return ([set(s) for s in self.graph.adj], dict(self.graph.weights),
                list(self.mate), self._size)

    def _restore(self, state) -> None:
        self.graph.adj, self.graph.weights, self.mate, self._size = state


def maximum_matching_size(graph: DynGraph, side: Optional[list[int]] = None) -> int:
    """From-scratch maximum matching size; the recompute cross-check."""
    if side is None:
        side = two_color(graph)
    mate: list[Optional[int]] = [None] * graph.n

    def try_augment(u: int, seen: set[int]) -> bool:
        for w in graph.adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if mate[w] is None or try_augment(mate[w], seen):
                mate[u] = w
                mate[w] = u
                return True
        return False

    size = 0
    for v in range(graph.n):
        if side[v] == 0 and mate[v] is None:
            if try_augment(v, set()):
                size += 1
    return size
