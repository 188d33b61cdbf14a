"""Independent reference computations the tests check the library against.

Everything here recomputes from first principles (entrywise loops, matrix
powers, exhaustive enumeration) and deliberately avoids the bit-packed
fast paths it is used to validate.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from omvlab.bitcore import BoolMatrix, BoolVector
from omvlab.dynoracles.graphs import DynGraph

INF = float("inf")


def entrywise_mat_vec(m: BoolMatrix, v: BoolVector) -> BoolVector:
    out = BoolVector.zeros(m.n1)
    for i in range(m.n1):
        for j in range(m.n2):
            if m.entry(i, j) and v.get(j):
                out.set_bit(i, 1)
                break
    return out


def triple_loop_vmv(u: BoolVector, m: BoolMatrix, v: BoolVector) -> int:
    for i in range(m.n1):
        if not u.get(i):
            continue
        for j in range(m.n2):
            if m.entry(i, j) and v.get(j):
                return 1
    return 0


def witness_indices(u: BoolVector, m: BoolMatrix, v: BoolVector) -> list[int]:
    mv = entrywise_mat_vec(m, v)
    return [i for i in range(m.n1) if u.get(i) and mv.get(i)]


def random_simple_graph(rng: random.Random, n: int, p: float) -> DynGraph:
    g = DynGraph(n)
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                g.add_edge(a, b)
    return g


def random_bipartite_graph(rng: random.Random, nl: int, nr: int, p: float):
    g = DynGraph(nl + nr)
    for a in range(nl):
        for b in range(nr):
            if rng.random() < p:
                g.add_edge(a, nl + b)
    return g, [0] * nl + [1] * nr


def components_by_union_find(n: int, edges, alive=None) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        if alive is not None and not (alive[a] and alive[b]):
            continue
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return [find(x) for x in range(n)]


def floyd_warshall_hops(g: DynGraph) -> list[list[float]]:
    n = g.n
    dist = [[INF] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for a, b, _ in g.edges():
        dist[a][b] = 1
        dist[b][a] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def floyd_warshall_weighted(g: DynGraph) -> list[list[float]]:
    n = g.n
    dist = [[INF] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for a, b, w in g.edges():
        if w < dist[a][b]:
            dist[a][b] = w
            dist[b][a] = w
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == INF:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def reachability_closure(g: DynGraph) -> list[list[bool]]:
    n = g.n
    reach = [[False] * n for _ in range(n)]
    for v in range(n):
        reach[v][v] = True
    for a, b, _ in g.edges():
        reach[a][b] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                ri, rk = reach[i], reach[k]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    return reach


def has_triangle_brute(g: DynGraph) -> bool:
    return any(
        g.has_edge(i, j) and g.has_edge(j, k) and g.has_edge(i, k)
        for i, j, k in itertools.combinations(range(g.n), 3)
    )


def has_triangle_at_brute(g: DynGraph, s: int) -> bool:
    nbrs = sorted(g.adj[s])
    return any(g.has_edge(a, b) for a, b in itertools.combinations(nbrs, 2))


def densest_by_enumeration(g: DynGraph) -> tuple[Fraction, frozenset[int]]:
    best = Fraction(0)
    best_set = frozenset({0})
    edges = list(g.edges())
    for r in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), r):
            s = set(combo)
            inside = sum(1 for a, b, _ in edges if a in s and b in s)
            val = Fraction(inside, r)
            if val > best:
                best = val
                best_set = frozenset(s)
    return best, best_set


def matching_size_brute(g: DynGraph, side: list[int]) -> int:
    lefts = [v for v in range(g.n) if side[v] == 0]
    mate: dict[int, int] = {}

    def augment(u, seen):
        for w in g.adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in mate or augment(mate[w], seen):
                mate[w] = u
                return True
        return False

    size = 0
    for u in lefts:
        if augment(u, set()):
            size += 1
    return size
