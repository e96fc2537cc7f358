"""Randomized dense construction from sampled pattern copies, plus the
exhaustive trace-cover counting apparatus that bounds rare-subgraph counts.

The copy hypergraph on [n] keeps each of the T possible pattern copies
independently with probability p; the construction graph is the union of
the chosen copies' edges.  Sampling draws K ~ Binomial(T, p) and then K
distinct copies uniformly (rejection on random injections), which is
exactly equidistributed with per-copy coin flips and runs in O(K * a)
expected time instead of O(T).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .degeneracy import extract_core, is_degenerate
from .embed import (
    Copy,
    DEFAULT_COPY_LIMIT,
    automorphism_count,
    count_copies,
    enumerate_copies,
    find_embedding,
)
from .errors import EnumerationTruncated, NotApplicable, ParamOutOfRange, TooLarge
from .graphs import (
    Edge,
    Graph,
    complete_graph,
    induced_subgraph,
    subgraph_from_sets,
    write_graph6,
)

MAX_COVER_EDGES = 12
_SEED_MASK = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    a: int
    eps: float
    p: float
    delta0: float
    delta: float
    subset_size: int
    k_edges: int | None
    deletion_multiplier: float
    seed: int
    p_clamped: bool
    eps_within_claim_bound: bool

    @staticmethod
    def derive(
        n: int,
        pattern: Graph,
        eps: float,
        seed: int = 0,
        k_edges: int | None = None,
        p_override: float | None = None,
        deletion_multiplier: float = 1.0,
    ) -> "ConstructionParams":
        a = pattern.n
        if n < 1:
            raise ParamOutOfRange("n must be positive")
        if a < 2:
            raise ParamOutOfRange("pattern needs at least two vertices")
        if eps <= 0:
            raise ParamOutOfRange("eps must be positive")
        delta0 = eps / (2 * (a - 1))
        delta = delta0 / 2
        subset_size = math.floor(n ** (1 - delta0))
        if subset_size < a:
            raise ParamOutOfRange(
                f"subset size {subset_size} below pattern order {a}; n too small"
            )
        clamped = False
        if p_override is not None:
            if not 0 <= p_override <= 1:
                raise ParamOutOfRange("explicit p must lie in [0, 1]")
            p = p_override
        else:
            p = float(n) ** (1 - a + eps)
            if p > 1.0:
                p = 1.0
                clamped = True
        eps_ok = k_edges is None or eps < 1 / (2 * k_edges)
        return ConstructionParams(
            n=n,
            a=a,
            eps=eps,
            p=p,
            delta0=delta0,
            delta=delta,
            subset_size=subset_size,
            k_edges=k_edges,
            deletion_multiplier=deletion_multiplier,
            seed=seed,
            p_clamped=clamped,
            eps_within_claim_bound=eps_ok,
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "eps": self.eps,
            "p": self.p,
            "delta0": self.delta0,
            "delta": self.delta,
            "subset_size": self.subset_size,
            "k_edges": self.k_edges,
            "deletion_multiplier": self.deletion_multiplier,
            "seed": self.seed,
            "p_clamped": self.p_clamped,
            "eps_within_claim_bound": self.eps_within_claim_bound,
        }


@dataclass
class CopySample:
    copies: list[Copy]  # canonical order
    params: ConstructionParams
    total_copies: int  # T: all possible pattern copies on [n]
    requested: int  # K drawn from Binomial(T, p)


def total_copy_count(n: int, pattern: Graph) -> int:
    """Number of distinct pattern copies on n labeled vertices."""
    a = pattern.n
    if a > n:
        return 0
    falling = 1
    for i in range(a):
        falling *= n - i
    return falling // automorphism_count(pattern)


def _base_images(pattern: Graph) -> list[frozenset[Edge]]:
    """Distinct pattern images on the fixed vertex set 0..a-1."""
    return [c.edges for c in enumerate_copies(pattern, complete_graph(pattern.n), limit=None).copies]


def sample_copy_hypergraph(params: ConstructionParams, pattern: Graph) -> CopySample:
    """Draw the binomial copy hypergraph for the given parameters."""
    if pattern.n != params.a:
        raise ParamOutOfRange("pattern order disagrees with params")
    n, a, p = params.n, params.a, params.p
    T = total_copy_count(n, pattern)
    rng = np.random.Generator(np.random.PCG64(params.seed & _SEED_MASK))
    if p == 0.0 or T == 0:
        return CopySample([], params, T, 0)
    if p == 1.0:
        base = _base_images(pattern)
        copies = []
        for comb in combinations(range(n), a):
            for image in base:
                edges = frozenset(
                    (comb[u], comb[v]) if comb[u] < comb[v] else (comb[v], comb[u])
                    for u, v in image
                )
                copies.append(Copy(frozenset(comb), edges))
        assert len(copies) == T
        copies.sort(key=Copy.key)
        return CopySample(copies, params, T, T)
    K = int(rng.binomial(T, p))
    chosen: dict[tuple, Copy] = {}
    while len(chosen) < K:
        injection = rng.choice(n, size=a, replace=False)
        edges = frozenset(
            (int(injection[u]), int(injection[v]))
            if injection[u] < injection[v]
            else (int(injection[v]), int(injection[u]))
            for u, v in pattern.edges
        )
        copy = Copy(frozenset(int(x) for x in injection), edges)
        chosen.setdefault(copy.key(), copy)
    copies = [chosen[k] for k in sorted(chosen)]
    return CopySample(copies, params, T, K)


def union_graph(sample: CopySample) -> Graph:
    """Edges present in at least one sampled copy."""
    edges: set[Edge] = set()
    for copy in sample.copies:
        edges |= copy.edges
    return Graph(sample.params.n, frozenset(edges))


# --- trace covers -----------------------------------------------------------


@dataclass(frozen=True)
class Trace:
    """A subgraph of the core, given as the endpoints of its edge set."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]


@dataclass
class TraceCover:
    traces: list[Trace]
    v_sizes: list[int]
    overlap_sizes: list[int]
    sum_v: int
    size: int

    def to_json_dict(self) -> dict:
        return {
            "traces": [
                {"vertices": list(t.vertices), "edges": [list(e) for e in t.edges]}
                for t in self.traces
            ],
            "v_sizes": self.v_sizes,
            "overlap_sizes": self.overlap_sizes,
            "sum_v": self.sum_v,
            "size": self.size,
        }


def enumerate_min_trace_covers(
    core: Graph, pattern: Graph, max_size: int | None = None
) -> list[TraceCover]:
    """All inclusion-minimal covers of the core's edges by pattern-embeddable
    subgraphs (traces).  Minimality: dropping any trace breaks coverage."""
    edges = core.sorted_edges()
    k = len(edges)
    if k > MAX_COVER_EDGES:
        raise TooLarge(f"core has {k} edges, exhaustive cap is {MAX_COVER_EDGES}")
    if k == 0:
        return []
    # candidate traces = embeddable nonempty edge subsets
    candidates: list[tuple[int, Trace]] = []  # (edge bitmask, trace)
    for mask in range(1, 1 << k):
        sub_edges = [edges[i] for i in range(k) if (mask >> i) & 1]
        verts = sorted({w for e in sub_edges for w in e})
        sub, _ = subgraph_from_sets(verts, sub_edges)
        if find_embedding(sub, pattern) is not None:
            candidates.append((mask, Trace(tuple(verts), tuple(sub_edges))))
    by_edge: list[list[int]] = [[] for _ in range(k)]
    for ci, (mask, _) in enumerate(candidates):
        for i in range(k):
            if (mask >> i) & 1:
                by_edge[i].append(ci)

    full = (1 << k) - 1
    found: set[frozenset[int]] = set()
    cap = max_size if max_size is not None else k

    def rec(covered: int, chosen: list[int]):
        if covered == full:
            for ci in chosen:
                others = 0
                for cj in chosen:
                    if cj != ci:
                        others |= candidates[cj][0]
                if covered == others:
                    return  # a trace is redundant: not inclusion-minimal
            found.add(frozenset(chosen))
            return
        if len(chosen) >= cap:
            return
        lowest = 0
        while (covered >> lowest) & 1:
            lowest += 1
        for ci in by_edge[lowest]:
            if ci in chosen:
                continue
            rec(covered | candidates[ci][0], chosen + [ci])

    rec(0, [])
    covers = []
    for chosen in sorted(found, key=lambda s: (len(s), tuple(sorted(s)))):
        traces = sorted((candidates[ci][1] for ci in chosen), key=lambda t: t.edges)
        vsets = [set(t.vertices) for t in traces]
        v_sizes = [len(vs) for vs in vsets]
        overlaps = []
        for idx, vs in enumerate(vsets):
            rest = set().union(*(w for j, w in enumerate(vsets) if j != idx)) if len(vsets) > 1 else set()
            overlaps.append(len(vs & rest))
        covers.append(
            TraceCover(
                traces=list(traces),
                v_sizes=v_sizes,
                overlap_sizes=overlaps,
                sum_v=sum(v_sizes),
                size=len(traces),
            )
        )
    return covers


@dataclass
class CoverReport:
    core_n: int
    covers_total: int
    covers_in_scope: int  # size >= 2 and every overlap >= 2
    violations: list[TraceCover]
    min_slack: int | None
    min_cover: TraceCover | None
    equality_cases: int
    all_covers_overlap_ge2: bool

    def to_json_dict(self) -> dict:
        return {
            "core_n": self.core_n,
            "covers_total": self.covers_total,
            "covers_in_scope": self.covers_in_scope,
            "violations": [c.to_json_dict() for c in self.violations],
            "min_slack": self.min_slack,
            "min_cover": self.min_cover.to_json_dict() if self.min_cover else None,
            "equality_cases": self.equality_cases,
            "all_covers_overlap_ge2": self.all_covers_overlap_ge2,
        }


def verify_cover_inequality(core: Graph, pattern: Graph) -> CoverReport:
    """Check sum(v_i) >= core order + cover size over every in-scope
    inclusion-minimal trace cover (size >= 2, all overlaps >= 2); report the
    minimizing cover and whether every cover satisfies the overlap property.
    """
    covers = enumerate_min_trace_covers(core, pattern)
    b = core.n
    in_scope = [
        c for c in covers if c.size >= 2 and all(s >= 2 for s in c.overlap_sizes)
    ]
    violations = [c for c in in_scope if c.sum_v < b + c.size]
    min_slack = None
    min_cover = None
    equality = 0
    for c in in_scope:
        slack = c.sum_v - (b + c.size)
        if slack == 0:
            equality += 1
        if min_slack is None or slack < min_slack:
            min_slack = slack
            min_cover = c
    all_ge2 = bool(covers) and all(
        all(s >= 2 for s in c.overlap_sizes) for c in covers
    )
    return CoverReport(
        core_n=b,
        covers_total=len(covers),
        covers_in_scope=len(in_scope),
        violations=violations,
        min_slack=min_slack,
        min_cover=min_cover,
        equality_cases=equality,
        all_covers_overlap_ge2=all_ge2,
    )


# --- end-to-end construction -------------------------------------------------


@dataclass
class ConstructionReport:
    params: ConstructionParams
    cores: list[str]  # graph6 of each extracted core
    core_copy_counts: list[int]
    sampled_copies: int
    union_edges: int
    deletions: list[int]
    deletions_within_budget: bool
    deletion_budget: float
    survivors: list[int]
    family_free: list[bool]
    density_fraction: float
    density_trials: int
    density_subset_size: int

    def to_json_dict(self) -> dict:
        return {
            "params": self.params.to_json_dict(),
            "cores": self.cores,
            "core_copy_counts": self.core_copy_counts,
            "sampled_copies": self.sampled_copies,
            "union_edges": self.union_edges,
            "deletions": self.deletions,
            "deletions_within_budget": self.deletions_within_budget,
            "deletion_budget": self.deletion_budget,
            "survivors_count": len(self.survivors),
            "family_free": self.family_free,
            "density": {
                "fraction": self.density_fraction,
                "trials": self.density_trials,
                "subset_size": self.density_subset_size,
            },
        }


def construct_family_free(
    n: int,
    pattern: Graph,
    family: list[Graph],
    eps: float,
    seed: int = 0,
    deletion_multiplier: float = 1.0,
    density_trials: int = 1000,
    copy_limit: int | None = DEFAULT_COPY_LIMIT,
) -> tuple[Graph, ConstructionReport]:
    """Sample the copy-union graph, delete one vertex from every copy of
    each family member's core, and return the surviving induced graph with
    a run report (copy counts, deletion budget check, density estimate,
    direct family-freeness verification)."""
    if not family:
        raise ParamOutOfRange("family must be nonempty")
    cores = []
    for member in family:
        if is_degenerate(member, pattern).degenerate:
            raise NotApplicable(
                "a family member is pattern-degenerate; no free dense graph exists"
            )
        cores.append(extract_core(member, pattern))
    k_edges = max(core.m for core in cores)
    params = ConstructionParams.derive(
        n,
        pattern,
        eps,
        seed=seed,
        k_edges=k_edges,
        deletion_multiplier=deletion_multiplier,
    )
    sample = sample_copy_hypergraph(params, pattern)
    g0 = union_graph(sample)

    doomed: set[int] = set()
    counts = []
    for core in cores:
        enum = enumerate_copies(core, g0, limit=copy_limit)
        if enum.truncated:
            raise EnumerationTruncated("core copy enumeration truncated")
        counts.append(len(enum.copies))
        for copy in enum.copies:
            doomed.add(min(copy.vertices))
    survivors = [v for v in range(n) if v not in doomed]
    final, _ = induced_subgraph(g0, survivors)

    budget = deletion_multiplier * math.sqrt(n)
    free = [not find_embedding(member, final) for member in family]
    subset = min(params.subset_size, final.n)
    density = estimate_density(
        final, pattern, subset, trials=density_trials, seed=(seed ^ 0xD1CE) & _SEED_MASK
    )
    report = ConstructionReport(
        params=params,
        cores=[write_graph6(c) for c in cores],
        core_copy_counts=counts,
        sampled_copies=len(sample.copies),
        union_edges=g0.m,
        deletions=sorted(doomed),
        deletions_within_budget=len(doomed) <= budget,
        deletion_budget=budget,
        survivors=survivors,
        family_free=[bool(x) for x in free],
        density_fraction=density.fraction,
        density_trials=density.trials,
        density_subset_size=subset,
    )
    return final, report


# --- Monte Carlo estimators ---------------------------------------------------


@dataclass
class DensityEstimate:
    fraction: float
    hits: int
    trials: int
    subset_size: int


@dataclass
class CopyCountStats:
    trials: int
    counts: list[int]
    mean: float
    max: int
    sqrt_n: float
    frac_within_sqrt: float
    cover_size_min: int | None
    exponent_bound: float | None
    # every cover of size l contributes ~n^(l*eps), so the largest
    # inclusion-minimal cover dominates the expected count
    cover_size_max: int | None
    exponent_dominant: float | None

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "counts": self.counts,
            "mean": self.mean,
            "max": self.max,
            "sqrt_n": self.sqrt_n,
            "frac_within_sqrt": self.frac_within_sqrt,
            "cover_size_min": self.cover_size_min,
            "exponent_bound": self.exponent_bound,
            "cover_size_max": self.cover_size_max,
            "exponent_dominant": self.exponent_dominant,
        }


def _density_trial(args) -> int:
    g, pattern, subset_size, seed = args
    rng = np.random.Generator(np.random.PCG64(seed))
    subset = rng.choice(g.n, size=subset_size, replace=False)
    sub, _ = induced_subgraph(g, subset.tolist())
    return 1 if find_embedding(pattern, sub) is not None else 0


def _copy_count_trial(args) -> int:
    core, pattern, n, eps, seed, copy_limit, p_override = args
    params = ConstructionParams.derive(n, pattern, eps, seed=seed, p_override=p_override)
    sample = sample_copy_hypergraph(params, pattern)
    g = union_graph(sample)
    count, truncated = count_copies(core, g, limit=copy_limit)
    if truncated:
        raise EnumerationTruncated("core copy count truncated during trial")
    return count


def _run_trials(worker, jobs: int, tasks: list) -> list:
    if jobs <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks, chunksize=max(1, len(tasks) // jobs)))


def estimate_density(
    g: Graph,
    pattern: Graph,
    subset_size: int,
    trials: int = 1000,
    seed: int = 0,
    jobs: int = 1,
) -> DensityEstimate:
    """Fraction of uniform subsets of the given size whose induced subgraph
    contains a pattern copy; one independent seed per trial."""
    if subset_size > g.n:
        raise ParamOutOfRange("subset size exceeds graph order")
    tasks = [(g, pattern, subset_size, (seed ^ t) & _SEED_MASK) for t in range(trials)]
    hits = sum(_run_trials(_density_trial, jobs, tasks))
    return DensityEstimate(hits / trials if trials else 0.0, hits, trials, subset_size)


def estimate_copy_count(
    core: Graph,
    pattern: Graph,
    n: int,
    eps: float,
    trials: int = 100,
    seed: int = 0,
    jobs: int = 1,
    copy_limit: int | None = DEFAULT_COPY_LIMIT,
    p_override: float | None = None,
) -> CopyCountStats:
    """Distribution of the number of core copies over independent samples
    of the copy-union graph, with the exhaustive cover-exponent bounds."""
    tasks = [
        (core, pattern, n, eps, (seed ^ t) & _SEED_MASK, copy_limit, p_override)
        for t in range(trials)
    ]
    counts = _run_trials(_copy_count_trial, jobs, tasks)
    covers = enumerate_min_trace_covers(core, pattern)
    sizes = [c.size for c in covers if c.size >= 2]
    ell_min = min(sizes) if sizes else None
    ell_max = max(sizes) if sizes else None
    sqrt_n = math.sqrt(n)
    within = sum(1 for x in counts if x <= sqrt_n)
    return CopyCountStats(
        trials=trials,
        counts=counts,
        mean=sum(counts) / trials if trials else 0.0,
        max=max(counts) if counts else 0,
        sqrt_n=sqrt_n,
        frac_within_sqrt=within / trials if trials else 0.0,
        cover_size_min=ell_min,
        exponent_bound=ell_min * eps if ell_min is not None else None,
        cover_size_max=ell_max,
        exponent_dominant=ell_max * eps if ell_max is not None else None,
    )
