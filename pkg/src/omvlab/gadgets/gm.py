"""Builders for the bipartite graph behind most gadgets: left vertices
0..n1-1 carry the rows, right vertices n1..n1+n2-1 carry the columns, and
(r_j, l_i) is an edge exactly when M_ij = 1."""

from __future__ import annotations

from ..bitcore import BoolMatrix
from ..dynoracles.graphs import DynGraph


def left(i: int) -> int:
    return i


def right(matrix: BoolMatrix, j: int) -> int:
    return matrix.n1 + j


def gm_graph(matrix: BoolMatrix, extra: int = 0, directed: bool = False) -> DynGraph:
    """G_M plus `extra` unused vertices appended after L and R.  Directed
    graphs orient every matrix edge from the right side to the left."""
    g = DynGraph(matrix.n1 + matrix.n2 + extra, directed=directed)
    for i in range(matrix.n1):
        for j in matrix.rows[i].support():
            g.add_edge(matrix.n1 + j, i)
    return g
