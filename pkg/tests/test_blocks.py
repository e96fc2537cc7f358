from ramseykit.blocks import articulation_points, block_decomposition
from ramseykit.graphs import Graph, complete_graph, cycle_graph, path_graph

from helpers import (
    all_graphs,
    articulation_oracle,
    bfs_components,
    bowtie,
    random_graphs,
)


def check_against_oracle(g: Graph):
    dec = block_decomposition(g)
    assert set(dec.cut_vertices) == articulation_oracle(g)
    assert set(articulation_points(g)) == articulation_oracle(g)

    # blocks partition the edge set
    seen = []
    for b in dec.blocks:
        seen.extend(b.edges)
    assert sorted(seen) == g.sorted_edges()
    assert len(seen) == len(set(seen))

    # pairwise vertex intersections have size <= 1, and shared => cut
    for i, bi in enumerate(dec.blocks):
        for bj in dec.blocks[i + 1:]:
            shared = set(bi.vertices) & set(bj.vertices)
            assert len(shared) <= 1
            assert shared <= set(dec.cut_vertices)

    # every block of >= 3 vertices stays connected after any deletion
    for b in dec.blocks:
        idx = {v: i for i, v in enumerate(b.vertices)}
        adj = [set() for _ in b.vertices]
        for u, v in b.edges:
            adj[idx[u]].add(idx[v])
            adj[idx[v]].add(idx[u])
        if len(b.vertices) < 3:
            continue
        for v in range(len(b.vertices)):
            trimmed = [set(a) for a in adj]
            for w in trimmed[v]:
                trimmed[w].discard(v)
            trimmed[v] = set()
            comps = [c for c in bfs_components(len(adj), trimmed) if c != {v}]
            assert len(comps) == 1

    # block-cut tree is a forest with one tree per non-trivial component
    nodes = len(dec.blocks) + len(dec.cut_vertices)
    edge_count = len(dec.tree_edges)
    comps = [
        c for c in bfs_components(g.n, g.adj) if len(c) > 1
    ]
    assert nodes - edge_count == len(comps)

    # deterministic block order: by smallest contained edge
    keys = [b.edges[0] for b in dec.blocks]
    assert keys == sorted(keys)


class TestNamedExamples:
    def test_p3_middle(self):
        assert set(articulation_points(path_graph(3))) == {1}

    def test_c5_two_connected(self):
        assert articulation_points(cycle_graph(5)) == frozenset()
        dec = block_decomposition(cycle_graph(5))
        assert len(dec.blocks) == 1

    def test_bowtie(self):
        dec = block_decomposition(bowtie())
        assert set(dec.cut_vertices) == {2}
        assert len(dec.blocks) == 2
        assert all(len(b.vertices) == 3 for b in dec.blocks)

    def test_p5_single_edge_blocks(self):
        dec = block_decomposition(path_graph(5))
        assert len(dec.blocks) == 4
        assert set(dec.cut_vertices) == {1, 2, 3}

    def test_isolated_vertices_are_leaves(self):
        g = Graph.from_edges(5, [(0, 1)])
        dec = block_decomposition(g)
        assert dec.isolated_vertices == frozenset({2, 3, 4})
        assert len(dec.blocks) == 1

    def test_complete_graph_single_block(self):
        dec = block_decomposition(complete_graph(6))
        assert len(dec.blocks) == 1
        assert dec.cut_vertices == frozenset()


class TestOracle:
    def test_exhaustive_small(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                check_against_oracle(g)

    def test_sampled_medium(self):
        for n in (6, 7, 9):
            for g in random_graphs(n, 120, seed=n * 7):
                check_against_oracle(g)

    def test_long_path_no_recursion_limit(self):
        g = path_graph(5000)
        dec = block_decomposition(g)
        assert len(dec.blocks) == 4999
        assert len(dec.cut_vertices) == 4998
