"""Shared dynamic-graph carrier used by the reference oracles."""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .base import OracleError


class DynGraph:
    """Simple graph (no self-loops, no parallel edges), optionally
    directed, with optional {0,1} edge weights, vertex-active flags and
    vertex colors."""

    def __init__(self, n: int, directed: bool = False):
        if n < 1:
            raise OracleError("graph needs at least one vertex")
        self.n = n
        self.directed = directed
        self.adj: list[set[int]] = [set() for _ in range(n)]
        if directed:
            self.radj: list[set[int]] = [set() for _ in range(n)]
        self.weights: dict[tuple[int, int], int] = {}
        self.active: list[bool] = [True] * n
        self.colors: list[int] = [0] * n

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise OracleError(f"unknown vertex {v}")

    def _key(self, a: int, b: int) -> tuple[int, int]:
        if self.directed:
            return (a, b)
        return (a, b) if a < b else (b, a)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]

    def add_edge(self, a: int, b: int, weight: int = 1) -> None:
        self.check_vertex(a)
        self.check_vertex(b)
        if a == b:
            raise OracleError(f"self-loop at {a} rejected")
        if b in self.adj[a]:
            raise OracleError(f"duplicate edge ({a}, {b})")
        if weight not in (0, 1):
            raise OracleError(f"edge weight must be 0 or 1, got {weight}")
        self.adj[a].add(b)
        if self.directed:
            self.radj[b].add(a)
        else:
            self.adj[b].add(a)
        self.weights[self._key(a, b)] = weight

    def remove_edge(self, a: int, b: int) -> None:
        self.check_vertex(a)
        self.check_vertex(b)
        if b not in self.adj[a]:
            raise OracleError(f"missing edge ({a}, {b})")
        self.adj[a].discard(b)
        if self.directed:
            self.radj[b].discard(a)
        else:
            self.adj[b].discard(a)
        del self.weights[self._key(a, b)]

    def weight(self, a: int, b: int) -> int:
        return self.weights[self._key(a, b)]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for (a, b), w in self.weights.items():
            yield a, b, w

    def edge_count(self) -> int:
        return len(self.weights)

    def copy(self) -> "DynGraph":
        g = DynGraph(self.n, self.directed)
        g.adj = [set(s) for s in self.adj]
        if self.directed:
            g.radj = [set(s) for s in self.radj]
        g.weights = dict(self.weights)
        g.active = list(self.active)
        g.colors = list(self.colors)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, ...]], directed: bool = False) -> "DynGraph":
        g = cls(n, directed)
        for e in edges:
            if len(e) == 2:
                g.add_edge(e[0], e[1])
            else:
                g.add_edge(e[0], e[1], e[2])
        return g


def graph_to_text(g: DynGraph) -> str:
    """"n m" header, then one "a b [w]" line per edge (0-based)."""
    lines = [f"{g.n} {g.edge_count()}"]
    for a, b, w in sorted(g.edges()):
        if w == 1:
            lines.append(f"{a} {b}")
        else:
            lines.append(f"{a} {b} {w}")
    return "\n".join(lines) + "\n"


def graph_from_text(text: str, directed: bool = False) -> DynGraph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty graph text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad graph header {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    if len(lines) != m + 1:
        raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
    g = DynGraph(n, directed)
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) == 2:
            g.add_edge(int(parts[0]), int(parts[1]))
        elif len(parts) == 3:
            g.add_edge(int(parts[0]), int(parts[1]), int(parts[2]))
        else:
            raise ValueError(f"bad edge line {ln!r}")
    return g


def bfs_dist(adj: list[set[int]], source: int, active: Optional[list[bool]] = None) -> list[Optional[int]]:
    """Hop distances from source over active vertices; None = unreachable."""
    n = len(adj)
    dist: list[Optional[int]] = [None] * n
    if active is not None and not active[source]:
        return dist
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if dist[w] is None and (active is None or active[w]):
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist
