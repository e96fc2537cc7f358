import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramseykit.embed import (
    automorphism_count,
    contains_copy,
    count_copies,
    enumerate_copies,
    enumerate_embeddings,
)
from ramseykit.errors import InvalidVertex
from ramseykit.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
)

from helpers import automorphisms_oracle, bowtie, copies_oracle, diamond, paw, random_graphs

PATTERNS = [
    complete_graph(2),
    path_graph(3),
    complete_graph(3),
    path_graph(4),
    cycle_graph(4),
    complete_graph(4),
    diamond(),
    paw(),
    disjoint_union(complete_graph(2), complete_graph(2)),
    disjoint_union(complete_graph(2), empty_graph(1)),
]


class TestAutomorphisms:
    def test_named(self):
        assert automorphism_count(complete_graph(3)) == 6
        assert automorphism_count(path_graph(3)) == 2
        assert automorphism_count(cycle_graph(4)) == 8

    def test_against_oracle(self):
        for g in PATTERNS:
            assert automorphism_count(g) == automorphisms_oracle(g)
        for g in random_graphs(5, 20, seed=5):
            assert automorphism_count(g) == automorphisms_oracle(g)


class TestEnumerateCopies:
    def test_k3_in_k4(self):
        assert len(enumerate_copies(complete_graph(3), complete_graph(4)).copies) == 4

    def test_p3_in_c4(self):
        assert len(enumerate_copies(path_graph(3), cycle_graph(4)).copies) == 4

    def test_triangle_free_host(self):
        assert enumerate_copies(complete_graph(3), cycle_graph(4)).copies == []

    def test_pinned_center_of_bowtie(self):
        enum = enumerate_copies(complete_graph(3), bowtie(), pin=(0, 2))
        assert len(enum.copies) == 2

    def test_pinned_leaf_of_bowtie(self):
        enum = enumerate_copies(complete_graph(3), bowtie(), pin=(0, 0))
        assert len(enum.copies) == 1

    def test_pin_validation(self):
        with pytest.raises(InvalidVertex):
            enumerate_copies(complete_graph(3), bowtie(), pin=(7, 0))
        with pytest.raises(InvalidVertex):
            enumerate_copies(complete_graph(3), bowtie(), pin=(0, 9))

    def test_limit_and_truncation(self):
        enum = enumerate_copies(complete_graph(2), complete_graph(6), limit=5)
        assert len(enum.copies) == 5
        assert enum.truncated
        enum = enumerate_copies(complete_graph(2), complete_graph(6), limit=15)
        assert len(enum.copies) == 15
        assert not enum.truncated

    def test_against_oracle(self):
        for pattern in PATTERNS:
            for host in random_graphs(6, 12, seed=hash(pattern.edges) % 1000):
                got = {c.key() for c in enumerate_copies(pattern, host).copies}
                assert got == copies_oracle(pattern, host)


class TestContainsCopy:
    def test_named(self):
        assert not contains_copy(cycle_graph(4), complete_graph(3))
        assert contains_copy(path_graph(3), complete_graph(3))
        assert contains_copy(diamond(), complete_graph(4))

    def test_empty_pattern(self):
        assert contains_copy(empty_graph(0), complete_graph(3))


class TestCountConsistency:
    def test_embeddings_equal_copies_times_automorphisms(self):
        for pattern in PATTERNS:
            if pattern.n > 4:
                continue
            aut = automorphism_count(pattern)
            for host in random_graphs(6, 10, seed=pattern.m * 13 + pattern.n):
                n_embeddings = sum(1 for _ in enumerate_embeddings(pattern, host))
                n_copies, truncated = count_copies(pattern, host)
                assert not truncated
                assert n_embeddings == n_copies * aut

    def test_pinned_union_covers_unpinned(self):
        pattern = path_graph(3)
        for host in random_graphs(6, 8, seed=21):
            unpinned = {c.key() for c in enumerate_copies(pattern, host).copies}
            for role in range(pattern.n):
                union = set()
                for v in range(host.n):
                    union |= {
                        c.key()
                        for c in enumerate_copies(pattern, host, pin=(role, v)).copies
                    }
                assert union == unpinned

    def test_pinned_subsets_of_unpinned(self):
        pattern = complete_graph(3)
        for host in random_graphs(7, 8, seed=33):
            unpinned = {c.key() for c in enumerate_copies(pattern, host).copies}
            for v in range(host.n):
                pinned = {
                    c.key() for c in enumerate_copies(pattern, host, pin=(1, v)).copies
                }
                assert pinned <= unpinned
                for key in pinned:
                    assert v in key[0]


@st.composite
def host_and_extra_edge(draw):
    n = draw(st.integers(min_value=2, max_value=7))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs) - 1))
    missing = [p for p in pairs if p not in edges]
    extra = draw(st.sampled_from(missing))
    return Graph(n, frozenset(edges)), extra


@settings(max_examples=60, deadline=None)
@given(host_and_extra_edge())
def test_copy_count_monotone_under_edge_addition(case):
    host, extra = case
    bigger = Graph(host.n, host.edges | {extra})
    for pattern in (complete_graph(3), path_graph(3), cycle_graph(4)):
        before, _ = count_copies(pattern, host)
        after, _ = count_copies(pattern, bigger)
        assert after >= before
