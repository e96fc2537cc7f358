"""Shared graph corpora and independent brute-force oracles for the tests.

Everything here must stay independent of the implementation paths it
checks: connectivity by plain BFS, embeddings by raw injections, Ramsey
decisions by full coloring enumeration, decompositions by edge-set
partition search.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from ramseykit.graphs import Graph

# --- named graphs -----------------------------------------------------------


def bowtie() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def diamond() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def paw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def two_triangles() -> Graph:
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])


# --- corpora ----------------------------------------------------------------


def all_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if (bits >> i) & 1))


def random_graph(n: int, m: int, rng: random.Random) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph(n, frozenset(rng.sample(pairs, min(m, len(pairs)))))


def random_graphs(n: int, count: int, seed: int):
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(count):
        m = rng.randint(0, len(pairs))
        yield Graph(n, frozenset(rng.sample(pairs, m)))


def bfs_components(n: int, adj) -> list[set[int]]:
    seen = set()
    comps = []
    for s in range(n):
        if s in seen:
            continue
        comp = {s}
        queue = [s]
        seen.add(s)
        while queue:
            u = queue.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.add(v)
                    queue.append(v)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(bfs_components(g.n, g.adj)) == 1


def random_connected_graphs(n_lo: int, n_hi: int, count: int, seed: int):
    """Deterministic sample of connected graphs, sizes uniform in range."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(n_lo, n_hi)
        pairs = list(combinations(range(n), 2))
        # bias toward sparse graphs, where the structure is interesting
        m = rng.randint(n - 1, min(len(pairs), 3 * n))
        g = Graph(n, frozenset(rng.sample(pairs, m)))
        if is_connected(g):
            out.append(g)
    return out


# --- oracles ----------------------------------------------------------------


def articulation_oracle(g: Graph) -> set[int]:
    """v is an articulation point iff removing it increases the number of
    components (isolated vertices never count)."""
    base = len(bfs_components(g.n, g.adj))
    cuts = set()
    for v in range(g.n):
        adj = [set(a) for a in g.adj]
        for w in adj[v]:
            adj[w].discard(v)
        adj[v] = set()
        comps = bfs_components(g.n, adj)
        # ignore the singleton left by v itself
        comps = [c for c in comps if c != {v}]
        if len(comps) > base:
            cuts.add(v)
    return cuts


def embeddings_oracle(pattern: Graph, host: Graph) -> list[tuple[int, ...]]:
    """All edge-preserving injections, by raw permutation enumeration."""
    found = []
    for perm in permutations(range(host.n), pattern.n):
        if all(host.has_edge(perm[u], perm[v]) for u, v in pattern.edges):
            found.append(perm)
    return found


def copies_oracle(pattern: Graph, host: Graph) -> set[tuple]:
    images = set()
    for perm in embeddings_oracle(pattern, host):
        verts = tuple(sorted(perm))
        edges = tuple(
            sorted(
                (min(perm[u], perm[v]), max(perm[u], perm[v]))
                for u, v in pattern.edges
            )
        )
        images.add((verts, edges))
    return images


def automorphisms_oracle(g: Graph) -> int:
    count = 0
    for perm in permutations(range(g.n)):
        if all(g.has_edge(perm[u], perm[v]) for u, v in g.edges):
            count += 1
    return count


def degenerate_oracle(g: Graph, pattern: Graph) -> bool:
    """Every 2-vertex-connected subgraph embeds into the pattern.

    It suffices to check induced subgraphs on vertex subsets that are
    2-connected with all their edges: removing edges never helps
    2-connectivity, and embeddability is inherited downward.
    """
    for size in range(2, g.n + 1):
        for subset in combinations(range(g.n), size):
            sub_edges = [(u, v) for u, v in g.edges if u in subset and v in subset]
            if not _two_connected(subset, sub_edges):
                continue
            relabel = {v: i for i, v in enumerate(subset)}
            sub = Graph(size, frozenset((relabel[u], relabel[v]) for u, v in sub_edges))
            if not embeddings_oracle(sub, pattern):
                return False
    return True


def _two_connected(vertices, edges) -> bool:
    """2-vertex-connected including K2; every vertex must carry an edge."""
    vs = list(vertices)
    n = len(vs)
    idx = {v: i for i, v in enumerate(vs)}
    adj = [set() for _ in vs]
    for u, v in edges:
        adj[idx[u]].add(idx[v])
        adj[idx[v]].add(idx[u])
    if any(not a for a in adj):
        return False
    if len(bfs_components(n, adj)) != 1:
        return False
    if n == 2:
        return True
    for v in range(n):
        trimmed = [set(a) for a in adj]
        for w in trimmed[v]:
            trimmed[w].discard(v)
        trimmed[v] = set()
        comps = [c for c in bfs_components(n, trimmed) if c != {v}]
        if len(comps) > 1:
            return False
    return True


def _partitions(items: list):
    """All set partitions, restricted-growth style."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def forest_size_oracle(g: Graph, pattern: Graph) -> int | None:
    """Minimum number of pieces over all edge-set partitions with isolated
    vertices attached, validated by brute-force ordering search."""
    edges = sorted(g.edges)
    isolated = [v for v in range(g.n) if not g.adj[v]]
    atoms = [("e", e) for e in edges] + [("v", v) for v in isolated]
    if not atoms:
        return 0
    best = None
    for part in _partitions(atoms):
        if best is not None and len(part) >= best:
            continue
        pieces = []
        ok = True
        for group in part:
            vs = set()
            es = []
            for kind, item in group:
                if kind == "e":
                    es.append(item)
                    vs.update(item)
                else:
                    vs.add(item)
            relabel = {v: i for i, v in enumerate(sorted(vs))}
            sub = Graph(len(vs), frozenset((relabel[u], relabel[v]) for u, v in es))
            if not embeddings_oracle(sub, pattern):
                ok = False
                break
            pieces.append(frozenset(vs))
        if not ok:
            continue
        if _orderable(pieces):
            best = len(part)
    return best


def _orderable(pieces: list[frozenset]) -> bool:
    """Can the pieces be ordered with single-vertex attachments?  Subset DP."""
    k = len(pieces)
    union_of = {}

    def union(mask: int) -> frozenset:
        if mask not in union_of:
            vs = frozenset()
            for i in range(k):
                if (mask >> i) & 1:
                    vs = vs | pieces[i]
            union_of[mask] = vs
        return union_of[mask]

    reachable = {0}
    frontier = [0]
    while frontier:
        mask = frontier.pop()
        if mask == (1 << k) - 1:
            return True
        cov = union(mask)
        for i in range(k):
            if (mask >> i) & 1:
                continue
            nxt = mask | (1 << i)
            if nxt in reachable:
                continue
            if len(pieces[i] & cov) <= 1:
                reachable.add(nxt)
                frontier.append(nxt)
    return (1 << k) - 1 in reachable


def ramsey_oracle(g: Graph, pattern: Graph, r: int) -> bool:
    """Enumerate all r^n colorings; monochromatic copies via the oracle
    copy list."""
    copies = [set(vs) for vs, _ in copies_oracle(pattern, g)]
    vertex_sets = {tuple(sorted(c)) for c in copies}
    if not vertex_sets:
        return False
    colorings = [[]]
    for _ in range(g.n):
        colorings = [c + [x] for c in colorings for x in range(r)]
    for coloring in colorings:
        if not any(
            len({coloring[v] for v in vs}) == 1 for vs in vertex_sets
        ):
            return False
    return True
