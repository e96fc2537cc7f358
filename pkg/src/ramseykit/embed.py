"""Subgraph isomorphism: enumerate, count, and pin copies of a pattern.

Backtracking over a connected pattern ordering that maximizes back-edges,
with bitmask candidate filtering on the host.  A Copy is an image
subgraph, identified by its (vertex set, edge set) pair; embeddings per
copy equal the pattern's automorphism count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidVertex
from .graphs import Edge, Graph

DEFAULT_COPY_LIMIT = 100_000


@dataclass(frozen=True)
class Embedding:
    """Injective role map: pattern vertex i sits at host vertex map[i]."""

    pattern_n: int
    map: tuple[int, ...]
    image_vertices: frozenset[int]
    image_edges: frozenset[Edge]


@dataclass(frozen=True)
class Copy:
    """An image subgraph of the pattern inside the host."""

    vertices: frozenset[int]
    edges: frozenset[Edge]

    def key(self) -> tuple:
        return (tuple(sorted(self.vertices)), tuple(sorted(self.edges)))


@dataclass
class CopyEnumeration:
    copies: list[Copy]
    truncated: bool


def _pattern_order(pattern: Graph, first: int | None = None) -> list[int]:
    """Vertex order maximizing already-placed neighbors at every step."""
    n = pattern.n
    order: list[int] = []
    seen: set[int] = set()
    if first is not None:
        order.append(first)
        seen.add(first)
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if v in seen:
                continue
            back = sum(1 for w in pattern.adj[v] if w in seen)
            key = (back, pattern.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        seen.add(best)
    return order


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_embeddings(
    pattern: Graph,
    host: Graph,
    pin: tuple[int, int] | None = None,
):
    """Yield every embedding of pattern into host, deterministically.

    pin = (role, host_vertex) restricts to embeddings with
    map[role] = host_vertex.
    """
    pn, hn = pattern.n, host.n
    if pin is not None:
        if not 0 <= pin[0] < pn:
            raise InvalidVertex(f"pin role {pin[0]} outside pattern")
        if not 0 <= pin[1] < hn:
            raise InvalidVertex(f"pin vertex {pin[1]} outside host")
    if pn > hn:
        return
    if pn == 0:
        yield Embedding(0, (), frozenset(), frozenset())
        return
    order = _pattern_order(pattern, first=pin[0] if pin else None)
    pos = {v: i for i, v in enumerate(order)}
    placed_nbrs = [
        [pos[w] for w in pattern.adj[order[i]] if pos[w] < i] for i in range(pn)
    ]
    hbits = host.adj_bits
    hdeg = [host.degree(v) for v in range(hn)]
    pdeg = [pattern.degree(order[i]) for i in range(pn)]
    full = (1 << hn) - 1
    assignment = [0] * pn

    def emit() -> Embedding:
        m = [0] * pn
        for i in range(pn):
            m[order[i]] = assignment[i]
        image_edges = frozenset(
            (m[u], m[v]) if m[u] < m[v] else (m[v], m[u]) for u, v in pattern.edges
        )
        return Embedding(pn, tuple(m), frozenset(m), image_edges)

    def extend(i: int, used: int):
        if i == pn:
            yield emit()
            return
        mask = full & ~used
        for j in placed_nbrs[i]:
            mask &= hbits[assignment[j]]
        need = pdeg[i]
        for hv in _iter_bits(mask):
            if hdeg[hv] < need:
                continue
            assignment[i] = hv
            yield from extend(i + 1, used | (1 << hv))

    if pin is not None:
        if hdeg[pin[1]] < pdeg[0]:
            return
        assignment[0] = pin[1]
        yield from extend(1, 1 << pin[1])
    else:
        yield from extend(0, 0)


def find_embedding(
    pattern: Graph, host: Graph, pin: tuple[int, int] | None = None
) -> Embedding | None:
    return next(enumerate_embeddings(pattern, host, pin), None)


def contains_copy(pattern: Graph, host: Graph) -> bool:
    """True iff host has at least one copy of pattern as a subgraph."""
    return find_embedding(pattern, host) is not None


def enumerate_copies(
    pattern: Graph,
    host: Graph,
    pin: tuple[int, int] | None = None,
    limit: int | None = DEFAULT_COPY_LIMIT,
) -> CopyEnumeration:
    """All distinct copies of pattern in host, deduplicated by image.

    Enumeration stops after `limit` distinct copies; truncation is
    reported on the result, never silent.
    """
    pairs, truncated = enumerate_copies_with_witness(pattern, host, pin, limit)
    return CopyEnumeration([c for c, _ in pairs], truncated)


def enumerate_copies_with_witness(
    pattern: Graph,
    host: Graph,
    pin: tuple[int, int] | None = None,
    limit: int | None = DEFAULT_COPY_LIMIT,
) -> tuple[list[tuple[Copy, Embedding]], bool]:
    """Like enumerate_copies but keeps the first embedding of each copy."""
    seen: dict[tuple, tuple[Copy, Embedding]] = {}
    truncated = False
    for emb in enumerate_embeddings(pattern, host, pin):
        copy = Copy(emb.image_vertices, emb.image_edges)
        k = copy.key()
        if k in seen:
            continue
        if limit is not None and len(seen) >= limit:
            truncated = True
            break
        seen[k] = (copy, emb)
    return [seen[k] for k in sorted(seen)], truncated


def count_copies(
    pattern: Graph,
    host: Graph,
    limit: int | None = DEFAULT_COPY_LIMIT,
) -> tuple[int, bool]:
    """(number of distinct copies, truncated flag)."""
    seen: set[tuple] = set()
    truncated = False
    for emb in enumerate_embeddings(pattern, host):
        k = (emb.image_vertices, emb.image_edges)
        if k in seen:
            continue
        if limit is not None and len(seen) >= limit:
            truncated = True
            break
        seen.add(k)
    return len(seen), truncated


def automorphism_count(g: Graph) -> int:
    """Number of edge-preserving bijections of g onto itself."""
    if g.n == 0:
        return 1
    return sum(1 for _ in enumerate_embeddings(g, g))
