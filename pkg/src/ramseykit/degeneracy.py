"""Pattern-degeneracy, minimum forest decompositions, and core extraction.

A graph is degenerate with respect to a pattern when every block (maximal
2-vertex-connected subgraph, single edges included) embeds into the
pattern.  Such a graph splits into an ordered list of pieces, each
embeddable into the pattern, where every later piece meets the union of
the earlier ones in at most one vertex.  Since no 2-connected subgraph can
cross a single-vertex attachment, pieces are unions of whole blocks (plus
isolated vertices), which makes exact minimization of the number of
pieces a partition search over the block-cut structure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import Block, block_decomposition
from .embed import find_embedding
from .errors import IsDegenerate
from .graphs import Edge, Graph, induced_subgraph, subgraph_from_sets

DEFAULT_NODE_BUDGET = 1_000_000


@dataclass(frozen=True)
class Piece:
    """One piece of a forest decomposition, in the host graph's labels."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]


@dataclass
class ForestDecomposition:
    pieces: list[Piece]
    # attachments[i] is the single vertex shared with the union of the
    # earlier pieces, or None when the piece is disjoint from it
    attachments: list[int | None]
    embeddings: list[dict[int, int]]  # piece vertex -> pattern vertex
    size: int
    minimal: bool  # False when the search budget expired


@dataclass
class DegeneracyCheck:
    degenerate: bool
    offending_block: Block | None


def is_degenerate(graph: Graph, pattern: Graph) -> DegeneracyCheck:
    """Does every block of graph embed into pattern?"""
    for block in block_decomposition(graph).blocks:
        sub, _ = subgraph_from_sets(block.vertices, block.edges)
        if find_embedding(sub, pattern) is None:
            return DegeneracyCheck(False, block)
    return DegeneracyCheck(True, None)


def extract_core(graph: Graph, pattern: Graph) -> Graph:
    """Smallest block of graph that does not embed into pattern.

    Ties on vertex count break by block order.  The result is relabeled
    to 0..k-1.
    """
    offending = []
    for block in block_decomposition(graph).blocks:
        sub, _ = subgraph_from_sets(block.vertices, block.edges)
        if find_embedding(sub, pattern) is None:
            offending.append(block)
    if not offending:
        raise IsDegenerate("every block embeds into the pattern")
    best = min(offending, key=lambda b: (len(b.vertices), b.edges))
    core, _ = induced_subgraph(graph, best.vertices)
    return core


# --- minimum decomposition search ------------------------------------------


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> bool:
        self.used += 1
        return self.used <= self.limit


def _atoms(graph: Graph) -> list[tuple[frozenset[int], frozenset[Edge]]]:
    dec = block_decomposition(graph)
    atoms = [(frozenset(b.vertices), frozenset(b.edges)) for b in dec.blocks]
    atoms.extend((frozenset({v}), frozenset()) for v in sorted(dec.isolated_vertices))
    return atoms


def _incidence_is_forest(group_vsets: list[frozenset[int]]) -> bool:
    """Acyclicity of the bipartite (group, shared vertex) incidence.

    An ordering with single-vertex attachments exists iff this holds.
    """
    owners: dict[int, list[int]] = {}
    for gi, vs in enumerate(group_vsets):
        for v in vs:
            owners.setdefault(v, []).append(gi)
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gi in range(len(group_vsets)):
        parent[("g", gi)] = ("g", gi)
    for v, gs in owners.items():
        if len(gs) < 2:
            continue
        parent[("v", v)] = ("v", v)
        for gi in gs:
            ra, rb = find(("v", v)), find(("g", gi))
            if ra == rb:
                return False
            parent[ra] = rb
    return True


def _order_groups(group_vsets: list[frozenset[int]]) -> list[int] | None:
    """Lexicographically smallest valid piece order, or None."""
    k = len(group_vsets)
    keys = [tuple(sorted(vs)) for vs in group_vsets]
    by_key = sorted(range(k), key=lambda i: keys[i])
    used = [False] * k
    order: list[int] = []
    covered: set[int] = set()

    def rec() -> bool:
        if len(order) == k:
            return True
        for i in by_key:
            if used[i]:
                continue
            if len(group_vsets[i] & covered) > 1:
                continue
            used[i] = True
            order.append(i)
            added = group_vsets[i] - covered
            covered.update(added)
            if rec():
                return True
            covered.difference_update(added)
            order.pop()
            used[i] = False
        return False

    return order if rec() else None


def forest_decomposition(
    graph: Graph,
    pattern: Graph,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ForestDecomposition | None:
    """Minimum-size forest decomposition of graph over pattern-embeddable
    pieces, or None when some block does not embed into pattern.

    Exact branch and bound over groupings of blocks and isolated vertices;
    among minimum decompositions the lexicographically smallest sequence
    of piece vertex sets is returned.  If the node budget runs out the
    result is still valid but flagged non-minimal.
    """
    atoms = _atoms(graph)
    n_atoms = len(atoms)
    if n_atoms == 0:
        return ForestDecomposition([], [], [], 0, True)

    embed_memo: dict[frozenset[int], bool] = {}

    def group_embeds(atom_ids: frozenset[int]) -> bool:
        cached = embed_memo.get(atom_ids)
        if cached is not None:
            return cached
        vs: set[int] = set()
        es: set[Edge] = set()
        for i in atom_ids:
            vs |= atoms[i][0]
            es |= atoms[i][1]
        sub, _ = subgraph_from_sets(vs, es)
        ok = find_embedding(sub, pattern) is not None
        embed_memo[atom_ids] = ok
        return ok

    for i in range(n_atoms):
        if not group_embeds(frozenset({i})):
            return None

    budget = _Budget(node_budget)
    groups: list[set[int]] = []
    best: list[list[frozenset[int]]] = []
    best_size = n_atoms + 1
    exhausted = False

    def vsets() -> list[frozenset[int]]:
        out = []
        for grp in groups:
            vs: set[int] = set()
            for i in grp:
                vs |= atoms[i][0]
            out.append(frozenset(vs))
        return out

    def assign(i: int, collect_at: int | None):
        # collect_at None: minimize; otherwise record all partitions of
        # exactly that many groups
        nonlocal best_size, exhausted
        target = collect_at if collect_at is not None else best_size - 1
        if len(groups) > target:
            return
        if i == n_atoms:
            if collect_at is not None and len(groups) != collect_at:
                return
            snapshot = [frozenset(grp) for grp in groups]
            if collect_at is None:
                best_size = len(groups)
                best.clear()
            best.append(snapshot)
            return
        upper = min(len(groups) + 1, target)
        for gi in range(upper):
            if not budget.spend():
                exhausted = True
                return
            new_group = gi == len(groups)
            if new_group:
                groups.append({i})
            else:
                groups[gi].add(i)
            ok = group_embeds(frozenset(groups[gi])) and _incidence_is_forest(vsets())
            if ok:
                assign(i + 1, collect_at)
            if new_group:
                groups.pop()
            else:
                groups[gi].remove(i)
            if exhausted:
                return

    assign(0, None)
    minimal = not exhausted
    if not best:
        # budget died before any full partition: fall back to one atom per piece
        best.append([frozenset({i}) for i in range(n_atoms)])
        best_size = n_atoms
        minimal = best_size == 1
    elif minimal:
        # re-enumerate every partition at the proven minimum for the
        # deterministic lexicographic tie-break
        found_min = best_size
        best.clear()
        best_size = found_min + 1  # disable the improvement pruning
        assign(0, found_min)
        best_size = found_min
        if exhausted and not best:
            return forest_decomposition(graph, pattern, node_budget=0)

    chosen = None
    chosen_key = None
    for partition in best:
        group_vsets = []
        for grp in partition:
            vs: set[int] = set()
            for i in grp:
                vs |= atoms[i][0]
            group_vsets.append(frozenset(vs))
        order = _order_groups(group_vsets)
        if order is None:
            continue
        key = tuple(tuple(sorted(group_vsets[i])) for i in order)
        if chosen_key is None or key < chosen_key:
            chosen_key = key
            chosen = (partition, order)

    partition, order = chosen
    pieces: list[Piece] = []
    attachments: list[int | None] = []
    embeddings: list[dict[int, int]] = []
    covered: set[int] = set()
    for idx in order:
        grp = partition[idx]
        vs: set[int] = set()
        es: set[Edge] = set()
        for i in grp:
            vs |= atoms[i][0]
            es |= atoms[i][1]
        overlap = vs & covered
        attachments.append(min(overlap) if overlap else None)
        covered |= vs
        piece = Piece(tuple(sorted(vs)), tuple(sorted(es)))
        pieces.append(piece)
        sub, kept = subgraph_from_sets(vs, es)
        emb = find_embedding(sub, pattern)
        embeddings.append({kept[i]: emb.map[i] for i in range(sub.n)})
    if attachments:
        attachments[0] = None
    return ForestDecomposition(pieces, attachments, embeddings, len(pieces), minimal)
