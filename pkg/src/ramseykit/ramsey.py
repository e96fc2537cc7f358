"""Exact desk-scale decisions: vertex Ramseyness and subset density.

A host is r-Ramsey for a pattern iff the hypergraph of copy vertex sets
admits no r-coloring free of monochromatic hyperedges; the search is a
self-contained backtracker with color-symmetry breaking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .embed import Copy, DEFAULT_COPY_LIMIT, enumerate_copies, find_embedding
from .errors import (
    EnumerationTruncated,
    ParamOutOfRange,
    SubsetSpaceTooLarge,
    UnsupportedPattern,
)
from .graphs import Graph, VertexColoring, induced_subgraph

DEFAULT_SEARCH_BUDGET = 100_000_000
EXACT_SUBSET_CAP = 1_000_000

DECIDED = "decided"
UNKNOWN = "unknown"


@dataclass
class CopyHypergraph:
    n: int
    hyperedges: list[frozenset[int]]  # distinct copy vertex sets, sorted
    witnesses: dict[frozenset[int], Copy]


@dataclass
class RamseyDecision:
    status: str  # "decided" | "unknown"
    ramsey: bool | None
    witness: VertexColoring | None  # proper coloring when not Ramsey
    nodes: int


@dataclass
class DensityResult:
    mode: str  # "exact" | "sampled"
    dense: bool | None  # exact mode only
    fraction: float
    hits: int
    trials: int
    subset_size: int
    witness_subset: tuple[int, ...] | None = None


def copy_hypergraph(
    g: Graph, pattern: Graph, limit: int | None = DEFAULT_COPY_LIMIT
) -> CopyHypergraph:
    """Distinct vertex sets of pattern copies in g, with one witness each."""
    enum = enumerate_copies(pattern, g, limit=limit)
    if enum.truncated:
        raise EnumerationTruncated("copy enumeration truncated building hypergraph")
    witnesses: dict[frozenset[int], Copy] = {}
    for copy in enum.copies:
        witnesses.setdefault(copy.vertices, copy)
    hyperedges = sorted(witnesses, key=lambda s: tuple(sorted(s)))
    return CopyHypergraph(g.n, hyperedges, witnesses)


def is_ramsey(
    g: Graph,
    pattern: Graph,
    r: int,
    copy_limit: int | None = DEFAULT_COPY_LIMIT,
    node_budget: int = DEFAULT_SEARCH_BUDGET,
) -> RamseyDecision:
    """Is every r-coloring of g's vertices forced to contain a
    monochromatic copy of pattern?

    False answers carry a verified witness coloring.  Patterns with
    isolated vertices are rejected (their monochromatic-copy convention is
    ambiguous).  A budget exhaustion yields an "unknown" decision.
    """
    if r < 1:
        raise ParamOutOfRange("need at least one color")
    if pattern.n < 1:
        raise UnsupportedPattern("pattern must have at least one vertex")
    if any(pattern.degree(v) == 0 for v in range(pattern.n)):
        raise UnsupportedPattern("patterns with isolated vertices are not supported")
    hg = copy_hypergraph(g, pattern, limit=copy_limit)
    n = g.n
    if not hg.hyperedges:
        witness = VertexColoring(tuple(0 for _ in range(n)))
        return RamseyDecision(DECIDED, False, witness, 0)

    # hyperedges indexed by their largest vertex: a set becomes fully
    # colored exactly when that vertex is assigned (vertices go in id order)
    closing: list[list[list[int]]] = [[] for _ in range(n)]
    for he in hg.hyperedges:
        members = sorted(he)
        closing[members[-1]].append(members)

    colors = [-1] * n
    nodes = 0

    class _Budget(Exception):
        pass

    def backtrack(v: int, max_used: int) -> bool:
        """True iff a proper coloring completes from this prefix."""
        nonlocal nodes
        if v == n:
            return True
        # new color introduced only as max_used+1, killing color symmetry
        top = min(r - 1, max_used + 1)
        for c in range(top + 1):
            nodes += 1
            if nodes > node_budget:
                raise _Budget()
            colors[v] = c
            ok = True
            for members in closing[v]:
                if all(colors[w] == c for w in members[:-1]):
                    ok = False
                    break
            if ok and backtrack(v + 1, max(max_used, c)):
                return True
        colors[v] = -1
        return False

    try:
        found = backtrack(0, -1)
    except _Budget:
        return RamseyDecision(UNKNOWN, None, None, nodes)
    if not found:
        return RamseyDecision(DECIDED, True, None, nodes)
    witness = VertexColoring(tuple(colors))
    for he in hg.hyperedges:
        members = list(he)
        assert len({witness.colors[w] for w in members}) > 1
    return RamseyDecision(DECIDED, False, witness, nodes)


def is_eps_dense(
    g: Graph,
    pattern: Graph,
    eps: float,
    mode: str = "exact",
    trials: int = 1000,
    seed: int = 0,
) -> DensityResult:
    """Does every induced subgraph on floor(eps * n) vertices contain a
    pattern copy?  Exact over all subsets, or estimated on uniform samples.
    """
    if not 0 < eps <= 1:
        raise ParamOutOfRange("eps must lie in (0, 1]")
    n = g.n
    size = math.floor(eps * n)
    if size < 1:
        raise ParamOutOfRange("floor(eps * n) must be at least 1")
    if mode == "exact":
        if math.comb(n, size) > EXACT_SUBSET_CAP:
            raise SubsetSpaceTooLarge(
                f"C({n},{size}) exceeds the exact cap {EXACT_SUBSET_CAP}"
            )
        total = 0
        for subset in combinations(range(n), size):
            total += 1
            sub, _ = induced_subgraph(g, subset)
            if find_embedding(pattern, sub) is None:
                return DensityResult("exact", False, 0.0, 0, total, size, subset)
        return DensityResult("exact", True, 1.0, total, total, size)
    if mode != "sampled":
        raise ParamOutOfRange(f"unknown mode {mode!r}")
    hits = 0
    for t in range(trials):
        rng = np.random.Generator(np.random.PCG64((seed ^ t) & 0xFFFFFFFFFFFFFFFF))
        subset = rng.choice(n, size=size, replace=False)
        sub, _ = induced_subgraph(g, subset.tolist())
        if find_embedding(pattern, sub) is not None:
            hits += 1
    return DensityResult("sampled", None, hits / trials, hits, trials, size)
