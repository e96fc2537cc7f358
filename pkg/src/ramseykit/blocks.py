"""Articulation points and 2-vertex-connected block decomposition.

One-pass iterative lowpoint computation with an explicit stack, so deep
paths cannot hit the recursion limit.  Single edges count as blocks;
isolated vertices become edge-less leaves of the block-cut tree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Edge, Graph


@dataclass(frozen=True)
class Block:
    """One block: its vertex set and the edges of the graph inside it."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    # bipartite block-cut tree: (block index, cut vertex id) pairs
    tree_edges: frozenset[tuple[int, int]]
    isolated_vertices: frozenset[int]


def _raw_blocks(g: Graph) -> list[list[Edge]]:
    """Edge sets of the blocks, via iterative Hopcroft-Tarjan."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[Edge]] = []
    edge_stack: list[Edge] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1 or not g.adj[root]:
            continue
        # frame: (vertex, parent, iterator over sorted neighbors)
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(sorted(g.adj[v]))))
                    advanced = True
                    break
                if v != parent and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if stack:
                pu = stack[-1][0]
                low[pu] = min(low[pu], low[u])
                if low[u] >= disc[pu]:
                    comp = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == (pu, u):
                            break
                    blocks.append(comp)
    return blocks


def block_decomposition(g: Graph) -> BlockDecomposition:
    raw = _raw_blocks(g)
    norm = []
    for comp in raw:
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in comp))
        vertices = tuple(sorted({w for e in edges for w in e}))
        norm.append(Block(vertices, edges))
    norm.sort(key=lambda b: b.edges[0])

    membership: dict[int, int] = {}
    cut = set()
    for b in norm:
        for v in b.vertices:
            membership[v] = membership.get(v, 0) + 1
            if membership[v] >= 2:
                cut.add(v)
    tree = frozenset(
        (i, v) for i, b in enumerate(norm) for v in b.vertices if v in cut
    )
    isolated = frozenset(v for v in g.vertices() if not g.adj[v])
    return BlockDecomposition(tuple(norm), frozenset(cut), tree, isolated)


def articulation_points(g: Graph) -> frozenset[int]:
    """Vertices whose removal increases the number of components."""
    return block_decomposition(g).cut_vertices
