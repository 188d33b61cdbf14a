"""Reference oracles against from-scratch recomputation, counter and
rollback discipline, and the text surfaces (graph files, op scripts)."""

import random
from fractions import Fraction

import pytest

from omvlab.dynoracles import (
    BipartiteMatchingOracle,
    ColorDistanceOracle,
    DFailureOracle,
    DensestSubgraphOracle,
    DiameterOracle,
    DistanceOracle,
    DynGraph,
    EricksonOracle,
    EvenShiloachOracle,
    OracleError,
    PaghOracle,
    SubgraphConnectivityOracle,
    TransitiveClosureOracle,
    TriangleOracle,
    ZeroPrefixOracle,
    bfs_dist,
    densest_subgraph_exact,
    format_script,
    graph_from_text,
    graph_to_text,
    maximum_matching_size,
    parse_script,
    run_script,
    subset_density,
)

from helpers import (
    components_by_union_find,
    densest_by_enumeration,
    floyd_warshall_hops,
    floyd_warshall_weighted,
    has_triangle_at_brute,
    has_triangle_brute,
    matching_size_brute,
    random_bipartite_graph,
    random_simple_graph,
    reachability_closure,
)

INF = float("inf")


class TestDynGraph:
    def test_rejects_self_loops_and_duplicates(self):
        g = DynGraph(3)
        with pytest.raises(OracleError):
            g.add_edge(1, 1)
        g.add_edge(0, 1)
        with pytest.raises(OracleError):
            g.add_edge(1, 0)
        with pytest.raises(OracleError):
            g.remove_edge(0, 2)

    def test_unknown_vertex(self):
        g = DynGraph(2)
        with pytest.raises(OracleError):
            g.add_edge(0, 5)

    def test_text_roundtrip(self):
        rng = random.Random(1)
        g = random_simple_graph(rng, 9, 0.4)
        text = graph_to_text(g)
        back = graph_from_text(text)
        assert back.n == g.n
        assert sorted(back.edges()) == sorted(g.edges())

    def test_weighted_text(self):
        g = DynGraph(3)
        g.add_edge(0, 1, 0)
        g.add_edge(1, 2, 1)
        back = graph_from_text(graph_to_text(g))
        assert back.weight(0, 1) == 0
        assert back.weight(1, 2) == 1


class TestSubgraphConnectivity:
    def test_path_toggle(self):
        g = DynGraph.from_edges(3, [(0, 1), (1, 2)])
        o = SubgraphConnectivityOracle(g)
        assert o.connected(0, 2)
        o.turn_off(1)
        assert not o.connected(0, 2)
        assert o.connected(0, 0)

    def test_single_vertex_self_connected(self):
        o = SubgraphConnectivityOracle(DynGraph(1))
        assert o.connected(0, 0)

    def test_random_script_vs_union_find(self):
        rng = random.Random(2)
        g = random_simple_graph(rng, 20, 0.15)
        o = SubgraphConnectivityOracle(g)
        edges = [(a, b) for a, b, _ in g.edges()]
        alive = [True] * 20
        for _ in range(700):
            v = rng.randrange(20)
            if rng.random() < 0.5:
                o.turn_off(v)
                alive[v] = False
            else:
                o.turn_on(v)
                alive[v] = True
            s, t = rng.randrange(20), rng.randrange(20)
            comp = components_by_union_find(20, edges, alive)
            want = alive[s] and alive[t] and comp[s] == comp[t]
            assert o.connected(s, t) == want

    def test_counters_and_rollback(self):
        g = DynGraph.from_edges(3, [(0, 1)])
        o = SubgraphConnectivityOracle(g)
        token = o.snapshot()
        o.turn_off(0)
        o.connected(0, 1)
        assert (o.updates, o.queries) == (1, 1)
        o.rollback(token)
        assert (o.updates, o.queries) == (1, 1)  # counters survive rollback
        assert o.connected(0, 1)


class TestDistanceOracle:
    def test_path_examples(self):
        g = DynGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        o = DistanceOracle(g)
        assert o.dist(0, 3) == 3
        o.delete_edge(1, 2)
        assert o.dist(0, 3) is None

    def test_duplicate_and_missing_edges_rejected(self):
        o = DistanceOracle(DynGraph.from_edges(3, [(0, 1)]))
        with pytest.raises(OracleError):
            o.insert_edge(0, 1)
        with pytest.raises(OracleError):
            o.delete_edge(1, 2)

    def test_random_script_vs_floyd_warshall(self):
        rng = random.Random(3)
        n = 14
        g = random_simple_graph(rng, n, 0.25)
        o = DistanceOracle(g)
        for _ in range(250):
            a, b = rng.randrange(n), rng.randrange(n)
            if a == b:
                continue
            if o.graph.has_edge(a, b):
                o.delete_edge(a, b)
            else:
                o.insert_edge(a, b)
            fw = floyd_warshall_hops(o.graph)
            for _ in range(3):
                s, t = rng.randrange(n), rng.randrange(n)
                want = None if fw[s][t] == INF else int(fw[s][t])
                assert o.dist(s, t) == want


class TestEvenShiloach:
    def test_star_spoke_deletion(self):
        g = DynGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        o = EvenShiloachOracle(g, 0)
        assert o.dist(3) == 1
        o.delete_edge(0, 3)
        assert o.dist(3) is None

    def test_cycle_becomes_path(self):
        # deleting one cycle edge leaves a 6-vertex path whose endpoints
        # sit at distance 5
        g = DynGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        o = EvenShiloachOracle(g, 2)
        assert o.dist(3) == 1
        o.delete_edge(2, 3)
        assert o.dist(3) == 5

    def test_insert_rejected(self):
        o = EvenShiloachOracle(DynGraph.from_edges(2, [(0, 1)]), 0)
        with pytest.raises(OracleError):
            o.insert_edge(0, 1)

    def test_full_random_deletion_vs_bfs_with_monotone_levels(self):
        rng = random.Random(4)
        g = random_simple_graph(rng, 30, 0.2)
        o = EvenShiloachOracle(g, 0)
        ref = g.copy()
        edges = [(a, b) for a, b, _ in g.edges()]
        rng.shuffle(edges)
        prev = list(o.level)
        for a, b in edges:
            o.delete_edge(a, b)
            ref.remove_edge(a, b)
            want = bfs_dist(ref.adj, 0)
            for v in range(30):
                assert o.dist(v) == want[v]
            assert all(c >= p for c, p in zip(o.level, prev))
            prev = list(o.level)


class TestTriangleOracle:
    def test_k3_vs_tree(self):
        o = TriangleOracle(DynGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
        assert o.has_triangle()
        assert o.has_triangle_at(0)
        tree = TriangleOracle(DynGraph.from_edges(4, [(0, 1), (1, 2), (1, 3)]))
        assert not tree.has_triangle()
        assert not tree.has_triangle_at(1)

    def test_random_script_vs_brute(self):
        rng = random.Random(5)
        n = 12
        o = TriangleOracle(random_simple_graph(rng, n, 0.2))
        for _ in range(250):
            a, b = rng.randrange(n), rng.randrange(n)
            if a == b:
                continue
            if o.graph.has_edge(a, b):
                o.delete_edge(a, b)
            else:
                o.insert_edge(a, b)
            assert o.has_triangle() == has_triangle_brute(o.graph)
            s = rng.randrange(n)
            assert o.has_triangle_at(s) == has_triangle_at_brute(o.graph, s)


class TestColorDistance:
    def test_recolor_changes_answer(self):
        g = DynGraph.from_edges(3, [(0, 1), (1, 2)])
        o = ColorDistanceOracle(g, [7, 0, 0])
        assert o.dist_to_color(2, 7) == 2
        o.set_color(1, 7)
        assert o.dist_to_color(2, 7) == 1
        assert o.dist_to_color(2, 9) is None

    def test_random_script_vs_recompute(self):
        rng = random.Random(6)
        n = 16
        g = random_simple_graph(rng, n, 0.2)
        colors = [rng.randint(0, 3) for _ in range(n)]
        o = ColorDistanceOracle(g, colors)
        for _ in range(300):
            v = rng.randrange(n)
            c = rng.randint(0, 3)
            o.set_color(v, c)
            colors[v] = c
            s = rng.randrange(n)
            want_c = rng.randint(0, 3)
            dist = bfs_dist(g.adj, s)
            options = [d for x, d in enumerate(dist)
                       if d is not None and colors[x] == want_c]
            want = min(options) if options else None
            assert o.dist_to_color(s, want_c) == want


class TestDFailure:
    def test_batch_and_rollback_semantics(self):
        g = DynGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        o = DFailureOracle(g, d=2)
        o.fail_batch([1])
        assert not o.connected(0, 3)
        o.fail_batch([])  # new batch rolls the old one back
        assert o.connected(0, 3)
        with pytest.raises(OracleError):
            o.fail_batch([0, 1, 2])

    def test_random_batches_vs_union_find(self):
        rng = random.Random(7)
        n = 18
        g = random_simple_graph(rng, n, 0.2)
        edges = [(a, b) for a, b, _ in g.edges()]
        o = DFailureOracle(g, d=6)
        for _ in range(200):
            batch = rng.sample(range(n), rng.randint(0, 6))
            o.fail_batch(batch)
            alive = [v not in set(batch) for v in range(n)]
            comp = components_by_union_find(n, edges, alive)
            for _ in range(3):
                s, t = rng.randrange(n), rng.randrange(n)
                want = alive[s] and alive[t] and comp[s] == comp[t]
                assert o.connected(s, t) == want


class TestMatchingOracle:
    def test_tracks_recompute_over_script(self):
        rng = random.Random(8)
        nl = nr = 9
        g, side = random_bipartite_graph(rng, nl, nr, 0.25)
        o = BipartiteMatchingOracle(g, side)
        assert o.matching_size_uncounted() == matching_size_brute(g, side)
        for _ in range(400):
            a = rng.randrange(nl)
            b = nl + rng.randrange(nr)
            if o.graph.has_edge(a, b):
                o.delete_edge(a, b)
            else:
                o.insert_edge(a, b)
            assert o.matching_size_uncounted() == matching_size_brute(o.graph, side)

    def test_matching_is_valid(self):
        rng = random.Random(9)
        g, side = random_bipartite_graph(rng, 7, 7, 0.4)
        o = BipartiteMatchingOracle(g, side)
        for v, w in enumerate(o.mate):
            if w is not None:
                assert o.mate[w] == v
                assert o.graph.has_edge(v, w)

    def test_rejects_same_side_edge(self):
        g = DynGraph(4)
        o = BipartiteMatchingOracle(g, [0, 0, 1, 1])
        with pytest.raises(OracleError):
            o.insert_edge(0, 1)

    def test_odd_cycle_rejected_by_two_coloring(self):
        g = DynGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(OracleError):
            BipartiteMatchingOracle(g)


class TestDiameterOracle:
    def test_zero_and_one_weight_edges(self):
        g0 = DynGraph(2)
        g0.add_edge(0, 1, 0)
        assert DiameterOracle(g0).diameter() == 0
        g1 = DynGraph(2)
        g1.add_edge(0, 1, 1)
        assert DiameterOracle(g1).diameter() == 1

    def test_disconnected_is_absent(self):
        assert DiameterOracle(DynGraph(2)).diameter() is None

    def test_random_script_vs_weighted_floyd_warshall(self):
        rng = random.Random(10)
        n = 12
        g = DynGraph(n)
        o = DiameterOracle(g)
        for _ in range(250):
            a, b = rng.randrange(n), rng.randrange(n)
            if a == b:
                continue
            if o.graph.has_edge(a, b):
                o.delete_edge(a, b)
            else:
                o.insert_edge(a, b, rng.randint(0, 1))
            fw = floyd_warshall_weighted(o.graph)
            ecc = max(max(row) for row in fw)
            want = None if ecc == INF else int(ecc)
            assert o.diameter() == want


class TestTransitiveClosure:
    def test_directed_reach(self):
        g = DynGraph(3, directed=True)
        g.add_edge(0, 1)
        g.add_edge(1, 2)
        o = TransitiveClosureOracle(g)
        assert o.reachable(0, 2)
        assert not o.reachable(2, 0)

    def test_random_script_vs_closure(self):
        rng = random.Random(11)
        n = 10
        g = DynGraph(n, directed=True)
        o = TransitiveClosureOracle(g)
        for _ in range(250):
            a, b = rng.randrange(n), rng.randrange(n)
            if a == b:
                continue
            if o.graph.has_edge(a, b):
                o.delete_edge(a, b)
            else:
                o.insert_edge(a, b)
            closure = reachability_closure(o.graph)
            for _ in range(3):
                s, t = rng.randrange(n), rng.randrange(n)
                assert o.reachable(s, t) == closure[s][t]

    def test_requires_directed_graph(self):
        with pytest.raises(OracleError):
            TransitiveClosureOracle(DynGraph(3))


class TestPagh:
    def test_intersection_insert(self):
        o = PaghOracle.from_iterables(4, [[1, 2], [2, 3]])
        idx = o.insert_intersection(0, 1)
        assert idx == 2
        assert o.member(2, 2)
        assert not o.member(2, 1)

    def test_random_scripts_vs_sets(self):
        rng = random.Random(12)
        universe = 16
        sets = [frozenset(x for x in range(universe) if rng.random() < 0.5)
                for _ in range(8)]
        o = PaghOracle.from_iterables(universe, sets)
        mirror = [set(s) for s in sets]
        for _ in range(400):
            if rng.random() < 0.4:
                i, j = rng.randrange(len(mirror)), rng.randrange(len(mirror))
                o.insert_intersection(i, j)
                mirror.append(mirror[i] & mirror[j])
            i = rng.randrange(len(mirror))
            x = rng.randrange(universe)
            assert o.member(i, x) == (x in mirror[i])

    def test_index_errors(self):
        o = PaghOracle.from_iterables(4, [[0]])
        with pytest.raises(OracleError):
            o.member(3, 0)
        with pytest.raises(OracleError):
            o.member(0, 9)


class TestZeroPrefix:
    def test_simple_cases(self):
        o = ZeroPrefixOracle([1, -1])
        assert o.has_zero_prefix()
        o.set(1, 1)
        assert not o.has_zero_prefix()
        o.set(0, 0)
        assert o.has_zero_prefix()

    def test_random_script_vs_scan(self):
        rng = random.Random(13)
        arr = [rng.randint(-4, 4) for _ in range(40)]
        o = ZeroPrefixOracle(arr)
        for _ in range(400):
            i = rng.randrange(40)
            x = rng.randint(-4, 4)
            o.set(i, x)
            arr[i] = x
            total = 0
            want = False
            for val in arr:
                total += val
                if total == 0:
                    want = True
                    break
            assert o.has_zero_prefix() == want


class TestErickson:
    def test_increments(self):
        o = EricksonOracle([[0, 1], [2, 0]])
        assert o.max() == 2
        o.inc_row(0)
        assert o.max() == 2
        o.inc_col(1)
        assert o.max() == 3  # (0,1): 1+1+1

    def test_random_script_vs_recompute(self):
        rng = random.Random(14)
        base = [[rng.randint(0, 3) for _ in range(8)] for _ in range(8)]
        o = EricksonOracle(base)
        row_off = [0] * 8
        col_off = [0] * 8
        for _ in range(400):
            if rng.random() < 0.5:
                i = rng.randrange(8)
                o.inc_row(i)
                row_off[i] += 1
            else:
                j = rng.randrange(8)
                o.inc_col(j)
                col_off[j] += 1
            want = max(base[i][j] + row_off[i] + col_off[j]
                       for i in range(8) for j in range(8))
            assert o.max() == want


class TestDensest:
    def test_triangle_and_single_edge(self):
        k3 = DynGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        best, witness = densest_subgraph_exact(k3)
        assert best == 1
        assert subset_density(k3, witness) == best
        edge = DynGraph.from_edges(2, [(0, 1)])
        assert densest_subgraph_exact(edge)[0] == Fraction(1, 2)

    def test_matches_enumeration_on_small_graphs(self):
        rng = random.Random(15)
        for _ in range(40):
            n = rng.randint(1, 7)
            g = random_simple_graph(rng, n, rng.uniform(0.1, 0.8))
            exact, witness = densest_subgraph_exact(g)
            brute, _ = densest_by_enumeration(g)
            assert exact == brute
            if g.edge_count():
                assert subset_density(g, witness) == exact

    def test_witness_achieves_density(self):
        rng = random.Random(16)
        g = random_simple_graph(rng, 10, 0.4)
        best, witness = densest_subgraph_exact(g)
        assert subset_density(g, witness) == best

    def test_oracle_updates(self):
        g = DynGraph(3)
        o = DensestSubgraphOracle(g)
        assert o.density() == 0
        o.insert_edge(0, 1)
        assert o.density() == Fraction(1, 2)
        o.insert_edge(1, 2)
        o.insert_edge(0, 2)
        assert o.density() == 1
        o.delete_edge(0, 2)
        assert o.density() == Fraction(2, 3)


class TestCounterDiscipline:
    def test_every_mutator_counts_one(self):
        g = DynGraph.from_edges(4, [(0, 1), (1, 2)])
        o = DistanceOracle(g)
        o.insert_edge(2, 3)
        o.delete_edge(0, 1)
        assert o.updates == 2
        o.dist(0, 1)
        o.dist(1, 2)
        assert o.queries == 2

    def test_snapshot_rollback_keeps_counters(self):
        o = EricksonOracle([[1]])
        token = o.snapshot()
        o.inc_row(0)
        o.max()
        o.rollback(token)
        assert (o.updates, o.queries) == (1, 1)
        assert o.value(0, 0) == 1


class TestScripts:
    def test_parse_format_roundtrip(self):
        text = "on 1\noff 2\nconn 0 2\nins 0 1\ndel 0 1\ndist 0 2\n"
        ops = parse_script(text)
        assert format_script(ops) == text

    def test_run_script_subconn(self):
        g = DynGraph.from_edges(3, [(0, 1), (1, 2)])
        o = SubgraphConnectivityOracle(g)
        ops = parse_script("conn 0 2\noff 1\nconn 0 2\non 1\nconn 0 2\n")
        answers = run_script(o, ops)
        assert [a for _, a in answers] == [True, False, True]

    def test_run_script_arrays(self):
        o = ZeroPrefixOracle([1, 1])
        answers = run_script(o, parse_script("zprefix\nset 1 -1\nzprefix\n"))
        assert [a for _, a in answers] == [False, True]

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_script("frobnicate 1\n")
        with pytest.raises(ValueError):
            parse_script("conn 1\n")
        with pytest.raises(ValueError):
            parse_script("tri 1 2\n")

    def test_comments_and_blanks(self):
        ops = parse_script("# header\n\non 3  # trailing\n")
        assert ops == [("on", [3])]
