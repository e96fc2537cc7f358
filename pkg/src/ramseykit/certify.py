"""Certifying dichotomy: embed the target graph or color away the pattern.

Given a host G, a pattern, and a pattern-degenerate target graph with a
minimum forest decomposition into pieces, produce either an embedding of
the target into G, or a vertex coloring of G with at most
pieces * (2*(a-1)*(b-2) + 1) colors and no monochromatic pattern copy
(a, b the pattern/target vertex counts).  Both branches are verified
before they are returned.

The coloring machinery works level by level: vertices carrying few
pairwise-almost-disjoint pattern copies in a chosen role are colored via
a bounded-out-degree auxiliary digraph, and the rest of the host recurses
on the target minus its last attached piece.  Every level first tries a
direct embedding search, so the embedding branch is returned exactly when
the host contains the target.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .degeneracy import ForestDecomposition, Piece, forest_decomposition
from .embed import (
    Copy,
    DEFAULT_COPY_LIMIT,
    Embedding,
    enumerate_copies,
    enumerate_copies_with_witness,
    enumerate_embeddings,
    find_embedding,
)
from .errors import EnumerationTruncated, NotDegenerate, ParamOutOfRange
from .graphs import Graph, VertexColoring, induced_subgraph, subgraph_from_sets

EMBEDDING = "embedding"
COLORING = "coloring"
UNKNOWN = "unknown"


@dataclass
class StarFamily:
    """Copies of the pattern through one host vertex in a fixed role,
    pairwise intersecting only at that vertex."""

    center: int
    role: int
    copies: list[Copy]
    embeddings: list[Embedding]

    def size(self) -> int:
        return len(self.copies)


@dataclass
class LevelStats:
    depth: int
    case: str
    host_size: int
    pieces: int
    u_size: int | None = None
    colors_here: int = 0


@dataclass
class Certificate:
    branch: str
    embedding: dict[int, int] | None
    coloring: VertexColoring | None
    palette_bound: int
    pattern_n: int
    target_n: int
    pieces: int
    verified: bool
    levels: list[LevelStats] = field(default_factory=list)
    reason: str | None = None

    def to_json_dict(self) -> dict:
        doc = {
            "branch": self.branch,
            "palette_bound": self.palette_bound,
            "pattern_n": self.pattern_n,
            "target_n": self.target_n,
            "pieces": self.pieces,
            "verified": self.verified,
            "levels": [
                {
                    "depth": s.depth,
                    "case": s.case,
                    "host_size": s.host_size,
                    "pieces": s.pieces,
                    "u_size": s.u_size,
                    "colors_here": s.colors_here,
                }
                for s in self.levels
            ],
        }
        if self.embedding is not None:
            doc["embedding"] = [[k, self.embedding[k]] for k in sorted(self.embedding)]
        if self.coloring is not None:
            doc["coloring"] = list(self.coloring.colors)
            doc["palette_size"] = self.coloring.palette_size
        if self.reason is not None:
            doc["reason"] = self.reason
        return doc


def star_family_at_least(
    g: Graph,
    pattern: Graph,
    role: int,
    v: int,
    t: int,
    limit: int | None = DEFAULT_COPY_LIMIT,
) -> tuple[bool, StarFamily | None]:
    """Decide whether t pattern copies sit at v in the given role, pairwise
    intersecting only at v.  Exact branch-and-bound packing over the pinned
    copies; a witness family is returned on success."""
    if t < 1:
        raise ParamOutOfRange("target family size must be at least 1")
    pairs, truncated = enumerate_copies_with_witness(pattern, g, pin=(role, v), limit=limit)
    if truncated:
        raise EnumerationTruncated(
            f"pinned copy enumeration at vertex {v} exceeded {limit} copies"
        )
    masks = []
    for copy, _ in pairs:
        mask = 0
        for w in copy.vertices:
            if w != v:
                mask |= 1 << w
        masks.append(mask)

    chosen: list[int] = []

    def pack(idx: int, used: int) -> bool:
        if len(chosen) == t:
            return True
        if len(chosen) + (len(masks) - idx) < t:
            return False
        for j in range(idx, len(masks)):
            if masks[j] & used:
                continue
            chosen.append(j)
            if pack(j + 1, used | masks[j]):
                return True
            chosen.pop()
        return False

    if not pack(0, 0):
        return False, None
    family = StarFamily(
        center=v,
        role=role,
        copies=[pairs[j][0] for j in chosen],
        embeddings=[pairs[j][1] for j in chosen],
    )
    return True, family


def _translate_copy(copy: Copy, kept: tuple[int, ...]) -> Copy:
    """Map a copy found in an induced subgraph back to the outer labels."""
    return Copy(
        frozenset(kept[w] for w in copy.vertices),
        frozenset(
            (min(kept[u], kept[w]), max(kept[u], kept[w])) for u, w in copy.edges
        ),
    )


def greedy_disjoint_family(
    g: Graph, pattern: Graph, limit: int | None = DEFAULT_COPY_LIMIT
) -> list[Copy]:
    """Maximal family of pairwise vertex-disjoint pattern copies, grown
    greedily over copies in canonical order.  Maximality holds by
    construction: the loop stops only when the leftover host has no copy."""
    family: list[Copy] = []
    remaining = list(range(g.n))
    while True:
        sub, kept = induced_subgraph(g, remaining)
        enum = enumerate_copies(pattern, sub, limit=limit)
        if enum.truncated:
            raise EnumerationTruncated("copy enumeration truncated in greedy family")
        if not enum.copies:
            return family
        copy = _translate_copy(enum.copies[0], kept)
        family.append(copy)
        taken = copy.vertices
        remaining = [w for w in remaining if w not in taken]


def degeneracy_coloring(gamma: Graph) -> VertexColoring:
    """Proper coloring via smallest-last ordering; uses at most
    degeneracy(gamma) + 1 colors."""
    n = gamma.n
    deg = [gamma.degree(v) for v in range(n)]
    alive = set(range(n))
    removal: list[int] = []
    for _ in range(n):
        v = min(alive, key=lambda w: (deg[w], w))
        removal.append(v)
        alive.remove(v)
        for w in gamma.adj[v]:
            if w in alive:
                deg[w] -= 1
    colors = [-1] * n
    for v in reversed(removal):
        used = {colors[w] for w in gamma.adj[v] if colors[w] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return VertexColoring(tuple(colors))


def verify_coloring(
    g: Graph, pattern: Graph, coloring: VertexColoring
) -> tuple[bool, Copy | None]:
    """True iff no pattern copy of g is monochromatic; otherwise one
    offending copy is returned."""
    if len(coloring.colors) != g.n:
        raise ParamOutOfRange("coloring must assign a color to every vertex")
    classes = coloring.color_classes()
    for c in sorted(classes):
        members = classes[c]
        if len(members) < pattern.n:
            continue
        sub, kept = induced_subgraph(g, members)
        emb = find_embedding(pattern, sub)
        if emb is not None:
            witness = _translate_copy(Copy(emb.image_vertices, emb.image_edges), kept)
            return False, witness
    return True, None


# --- the dichotomy ----------------------------------------------------------


def _solve(
    host: Graph,
    target: Graph,
    pattern: Graph,
    active: list[int],
    plist: list[tuple[Piece, int | None]],
    depth: int,
    copy_limit: int | None,
):
    """One recursion level.  Returns ("embedding", map, stats) with map in
    original host/target labels, or ("coloring", vertex->color dict,
    palette size, stats)."""
    a = pattern.n
    host_sub, hmap = induced_subgraph(host, active)
    bvs = sorted({v for piece, _ in plist for v in piece.vertices})
    target_sub, fmap = induced_subgraph(target, bvs)
    b_cur = target_sub.n
    stats = LevelStats(depth=depth, case="", host_size=host_sub.n, pieces=len(plist))

    emb = find_embedding(target_sub, host_sub)
    if emb is not None:
        stats.case = "direct-embedding"
        mapping = {fmap[i]: hmap[emb.map[i]] for i in range(target_sub.n)}
        return EMBEDDING, mapping, [stats]

    if len(plist) == 1:
        # single piece embeds into the pattern, so a pattern-free host is
        # exactly a target-free host: one color suffices
        stats.case = "single-piece"
        stats.colors_here = 1 if active else 0
        colors = {v: 0 for v in active}
        return COLORING, colors, stats.colors_here, [stats]

    if all(att is None for _, att in plist):
        stats.case = "disjoint"
        family = greedy_disjoint_family(host_sub, pattern, limit=copy_limit)
        if len(family) >= len(plist):
            # enough disjoint pattern copies: embed one piece per copy
            mapping: dict[int, int] = {}
            for (piece, _), copy in zip(plist, family):
                psub, pmap = subgraph_from_sets(piece.vertices, piece.edges)
                csub, ckept = subgraph_from_sets(copy.vertices, copy.edges)
                pe = find_embedding(psub, csub)
                assert pe is not None, "piece must embed into a pattern copy"
                for i in range(psub.n):
                    mapping[pmap[i]] = hmap[ckept[pe.map[i]]]
            stats.case = "disjoint-embedding"
            return EMBEDDING, mapping, [stats]
        colors: dict[int, int] = {}
        for j, copy in enumerate(family):
            verts = sorted(hmap[w] for w in copy.vertices)
            colors[verts[0]] = 2 * j
            for w in verts[1:]:
                colors[w] = 2 * j + 1
        leftover = [hmap[w] for w in range(host_sub.n) if hmap[w] not in colors]
        for w in leftover:
            colors[w] = 2 * len(family)
        palette = 2 * len(family) + (1 if leftover else 0)
        stats.colors_here = palette
        return COLORING, colors, palette, [stats]

    # glued case: detach the last piece that meets the earlier union
    stats.case = "glued"
    i = max(idx for idx, (_, att) in enumerate(plist) if att is not None)
    piece, x = plist[i]
    rest = plist[:i] + plist[i + 1:]
    assert b_cur >= 3, "glued case needs at least three target vertices"

    psub, pmap = subgraph_from_sets(piece.vertices, piece.edges)
    x_local = pmap.index(x)
    eta = min(enumerate_embeddings(psub, pattern), key=lambda e: e.map, default=None)
    assert eta is not None, "decomposition pieces embed into the pattern"
    role = eta.map[x_local]

    threshold = b_cur - 1
    u_local: list[int] = []
    witnesses: dict[int, StarFamily] = {}
    for v in range(host_sub.n):
        ok, fam = star_family_at_least(
            host_sub, pattern, role, v, threshold, limit=copy_limit
        )
        if ok:
            witnesses[v] = fam
        else:
            u_local.append(v)
    stats.u_size = len(u_local)

    # color the sparse side through the bounded-out-degree digraph
    u_sub, umap = induced_subgraph(host_sub, u_local)
    out_cap = (a - 1) * (b_cur - 2)
    arcs: set[tuple[int, int]] = set()
    for v in range(u_sub.n):
        copies, truncated = enumerate_copies_with_witness(
            pattern, u_sub, pin=(role, v), limit=copy_limit
        )
        if truncated:
            raise EnumerationTruncated("pinned enumeration truncated inside U")
        union: set[int] = {v}
        for copy, _ in copies:
            if copy.vertices & union == {v}:
                union |= copy.vertices
        reach = union - {v}
        assert len(reach) <= out_cap, "out-degree bound of the auxiliary digraph"
        for u in reach:
            arcs.add((min(u, v), max(u, v)))
    gamma = Graph(u_sub.n, frozenset(arcs))
    u_coloring = degeneracy_coloring(gamma)
    colors_u = u_coloring.palette_size
    assert colors_u <= 2 * out_cap + 1, "degeneracy palette bound"
    stats.colors_here = colors_u

    sub_active = [hmap[v] for v in range(host_sub.n) if v in witnesses]
    result = _solve(host, target, pattern, sub_active, rest, depth + 1, copy_limit)

    if result[0] == COLORING:
        _, child_colors, child_palette, child_stats = result
        colors = {hmap[umap[v]]: u_coloring.colors[v] for v in range(u_sub.n)}
        for w, c in child_colors.items():
            colors[w] = colors_u + c
        return COLORING, colors, colors_u + child_palette, [stats] + child_stats

    # the recursion found the target minus the detached piece: complete it
    # through a copy at the attachment's image, which cannot sit in U
    _, child_map, child_stats = result
    v_orig = child_map[x]
    orig2local = {hmap[idx]: idx for idx in range(host_sub.n)}
    v_local = orig2local[v_orig]
    fam = witnesses[v_local]
    blocked = {orig2local[w] for w in child_map.values() if w != v_orig}
    pick = None
    for copy, zeta in zip(fam.copies, fam.embeddings):
        if not (copy.vertices & blocked):
            pick = zeta
            break
    assert pick is not None, "some witness copy avoids the partial embedding"
    mapping = dict(child_map)
    for j, pv in enumerate(pmap):
        mapping[pv] = hmap[pick.map[eta.map[j]]]
    assert mapping[x] == v_orig
    stats.case = "glued-completion"
    return EMBEDDING, mapping, [stats] + child_stats


def palette_bound(pattern_n: int, target_n: int, pieces: int) -> int:
    if target_n >= 3:
        return pieces * (2 * (pattern_n - 1) * (target_n - 2) + 1)
    return max(1, 2 * pieces - 1)


def embed_or_color(
    host: Graph,
    pattern: Graph,
    target: Graph,
    decomposition: ForestDecomposition | None = None,
    copy_limit: int | None = DEFAULT_COPY_LIMIT,
) -> Certificate:
    """Produce a verified certificate: an embedding of target into host,
    or a coloring of host with no monochromatic pattern copy using at most
    palette_bound(...) colors.

    The embedding branch is returned exactly when host contains a copy of
    target.  Raises NotDegenerate when target has a block that does not
    embed into pattern; truncated enumerations yield an "unknown"
    certificate instead of a guess.
    """
    if pattern.n < 2:
        raise ParamOutOfRange("pattern needs at least two vertices")
    if target.n < 1:
        raise ParamOutOfRange("target needs at least one vertex")
    if decomposition is None:
        decomposition = forest_decomposition(target, pattern)
    if decomposition is None:
        raise NotDegenerate("target has a block that does not embed into the pattern")
    bound = palette_bound(pattern.n, target.n, decomposition.size)
    plist = list(zip(decomposition.pieces, decomposition.attachments))

    try:
        result = _solve(
            host, target, pattern, list(range(host.n)), plist, 0, copy_limit
        )
    except EnumerationTruncated as exc:
        return Certificate(
            branch=UNKNOWN,
            embedding=None,
            coloring=None,
            palette_bound=bound,
            pattern_n=pattern.n,
            target_n=target.n,
            pieces=decomposition.size,
            verified=False,
            reason=str(exc),
        )

    if result[0] == EMBEDDING:
        _, mapping, levels = result
        assert len(mapping) == target.n
        assert len(set(mapping.values())) == target.n
        for u, v in target.edges:
            assert host.has_edge(mapping[u], mapping[v])
        return Certificate(
            branch=EMBEDDING,
            embedding=mapping,
            coloring=None,
            palette_bound=bound,
            pattern_n=pattern.n,
            target_n=target.n,
            pieces=decomposition.size,
            verified=True,
            levels=levels,
        )

    _, colors, palette, levels = result
    coloring = VertexColoring(tuple(colors.get(v, 0) for v in range(host.n)))
    assert len(colors) == host.n
    ok, witness = verify_coloring(host, pattern, coloring)
    assert ok, f"coloring certificate failed verification: {witness}"
    assert coloring.palette_size <= bound
    return Certificate(
        branch=COLORING,
        embedding=None,
        coloring=coloring,
        palette_bound=bound,
        pattern_n=pattern.n,
        target_n=target.n,
        pieces=decomposition.size,
        verified=True,
        levels=levels,
    )
