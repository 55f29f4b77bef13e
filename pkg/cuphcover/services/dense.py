"""Randomized fractional biclique partitions of graphs whose degrees are all at least n - m.

Sample A at rate p, let B0 be the vertices outside A adjacent to every vertex
of A, and keep v of B0 with probability (1-p)^(d_v - n + m). Every edge is then
covered with probability exactly 2p(1-p)^m, so weighting each biclique by its
probability over that constant gives a fractional partition in which every
vertex has load (1/p + (1-p)^-m)/2.
"""
import logging
import math
from fractions import Fraction
from math import comb

import numpy as np

from cuphcover.core.config import settings
from cuphcover.core.errors import LimitExceededError, PreconditionError
from cuphcover.core.parallel import ordered_map
from cuphcover.core.rational import dyadic
from cuphcover.schemas.construction import ProjectionFamily
from cuphcover.schemas.cover import LoadProfile, WeightedCover
from cuphcover.schemas.dense import (
    DegenerateMass,
    DenseExactResult,
    DenseHyperMCReport,
    DenseMCReport,
    DenseOutcome,
    DenseParams,
    ProjectionMCReport,
)
from cuphcover.schemas.enums import DenseMethod, Family, Mode
from cuphcover.schemas.hypergraph import Cuph, Hypergraph, mask_vertices
from cuphcover.services.coverage import load_profile

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
# outer A-ranges per enumeration; fixed so results never depend on threads
ENUMERATION_CHUNKS = 64


def default_p(m: int) -> Fraction:
    """Dyadic approximation of (log m - 2 log log m)/(m log e); 1/2 when that leaves (0,1)."""
    if m >= 5:
        log_m = math.log2(m)
        x = (log_m - 2 * math.log2(log_m)) / (m * math.log2(math.e))
        if 0 < x < 1:
            p = dyadic(x)
            if 0 < p < 1:
                return p
    return HALF


def dense_closed_form_load(p: float, m: int) -> float:
    """(1/p + (1-p)^-m)/2 in floating point; inf once (1-p)^-m overflows."""
    exponent = -m * math.log1p(-p)
    if exponent > 700:
        return math.inf
    return 0.5 * (1 / p + math.exp(exponent))


def required_slack(host: Hypergraph) -> int:
    """Smallest admissible m: n - min degree for graphs, the worst projection otherwise."""
    if host.d == 2:
        return host.n - host.min_degree()
    return max((graph.n - graph.min_degree() for _, _, graph in _projections(host)), default=0)


def dense_params(host: Hypergraph, p: Fraction | None = None, m: int | None = None) -> DenseParams:
    m = required_slack(host) if m is None else m
    p = default_p(m) if p is None else Fraction(p)
    if not 0 < p < 1:
        raise PreconditionError(f"p={p} out of range (0,1)")
    if m < 0:
        raise PreconditionError(f"m={m} must be nonnegative")
    return DenseParams(p=p, m=m)


def _check_graph(graph: Hypergraph, params: DenseParams) -> None:
    if graph.d != 2:
        raise PreconditionError(f"expected a graph (d=2), got d={graph.d}")
    floor = graph.n - params.m
    for v, degree in enumerate(graph.degrees):
        if degree < floor:
            raise PreconditionError(f"vertex {v} has degree {degree} < n - m = {floor}")


def _sampler_tables(graph: Hypergraph, params: DenseParams) -> tuple[np.ndarray, np.ndarray]:
    n = graph.n
    nonadjacent = np.ones((n, n), dtype=np.int64)
    np.fill_diagonal(nonadjacent, 0)
    for u, v in graph.edges:
        nonadjacent[u, v] = nonadjacent[v, u] = 0
    q = 1.0 - float(params.p)
    rates = np.array([q ** (degree - n + params.m) for degree in graph.degrees], dtype=float)
    return nonadjacent, rates


def _draw(
    rng: np.random.Generator, p: float, nonadjacent: np.ndarray, rates: np.ndarray, size: int
) -> tuple[np.ndarray, np.ndarray]:
    n = len(rates)
    in_a = rng.random((size, n)) < p
    # v is blocked when some member of A is not adjacent to it
    blocked = (in_a.astype(np.int64) @ nonadjacent) > 0
    in_b = ~in_a & ~blocked & (rng.random((size, n)) < rates)
    return in_a, in_b


def sample_dense_batch(
    graph: Hypergraph, params: DenseParams, rng: np.random.Generator, size: int
) -> tuple[np.ndarray, np.ndarray]:
    """`size` independent outcomes as boolean membership matrices (A rows, B rows)."""
    _check_graph(graph, params)
    nonadjacent, rates = _sampler_tables(graph, params)
    return _draw(rng, float(params.p), nonadjacent, rates, size)


def sample_dense_biclique(
    graph: Hypergraph, params: DenseParams, rng: np.random.Generator
) -> DenseOutcome:
    in_a, in_b = sample_dense_batch(graph, params, rng, 1)
    return DenseOutcome(
        a=tuple(np.flatnonzero(in_a[0]).tolist()),
        b=tuple(np.flatnonzero(in_b[0]).tolist()),
    )


def outcome_probabilities(
    graph: Hypergraph, params: DenseParams, limit: int | None = None, threads: int = 1
) -> dict[tuple[int, int], Fraction]:
    """Exact Pr(A, B) for every outcome of positive probability, keyed by vertex bitmasks."""
    _check_graph(graph, params)
    limit = settings.get("DENSE_EXACT_LIMIT", 12) if limit is None else limit
    if graph.n > limit:
        raise LimitExceededError("DENSE_EXACT_LIMIT", limit, graph.n)

    n, p, q = graph.n, params.p, 1 - params.p
    full = (1 << n) - 1
    nonadjacent = [full & ~mask & ~(1 << v) for v, mask in enumerate(graph.adjacency)]
    rates = [q ** (degree - n + params.m) for degree in graph.degrees]
    by_size = [p**size * q ** (n - size) for size in range(n + 1)]

    def enumerate_range(a_masks: range) -> list[tuple[tuple[int, int], Fraction]]:
        found = []
        for a_mask in a_masks:
            branches = [(0, by_size[a_mask.bit_count()])]
            for v in range(n):
                if a_mask >> v & 1 or nonadjacent[v] & a_mask:
                    continue
                rate, bit = rates[v], 1 << v
                branches = [(b | bit, pr * rate) for b, pr in branches] + (
                    [(b, pr * (1 - rate)) for b, pr in branches] if rate != 1 else []
                )
            found.extend(((a_mask, b_mask), pr) for b_mask, pr in branches)
        return found

    total = 1 << n
    step = max(1, -(-total // ENUMERATION_CHUNKS))
    ranges = [range(start, min(start + step, total)) for start in range(0, total, step)]
    return dict(pair for found in ordered_map(enumerate_range, ranges, threads) for pair in found)


def dense_exact(
    graph: Hypergraph,
    params: DenseParams,
    keep_degenerate: bool = False,
    limit: int | None = None,
    threads: int = 1,
) -> DenseExactResult:
    outcomes = outcome_probabilities(graph, params, limit, threads)

    bicliques: dict[tuple[int, int], Fraction] = {}
    degenerate: dict[int, Fraction] = {}
    for (a_mask, b_mask), pr in outcomes.items():
        if a_mask and b_mask:
            key = (min(a_mask, b_mask), max(a_mask, b_mask))
            bicliques[key] = bicliques.get(key, Fraction(0)) + pr
        else:
            degenerate[a_mask | b_mask] = degenerate.get(a_mask | b_mask, Fraction(0)) + pr

    scale = 1 / params.normalization
    items = sorted(
        (
            (Cuph(d=2, parts=(mask_vertices(s), mask_vertices(t))), weight * scale)
            for (s, t), weight in bicliques.items()
        ),
        key=lambda pair: pair[0].parts,
    )
    result = DenseExactResult(
        params=params,
        cover=WeightedCover.build(graph, items, mode=Mode.PARTITION, family=Family.CB),
        degenerate=tuple(
            DegenerateMass(vertices=mask_vertices(mask), weight=weight * scale)
            for mask, weight in sorted(degenerate.items())
        ),
        keep_degenerate=keep_degenerate,
    )
    logger.info(
        "dense_exact n=%d p=%s m=%d: %d bicliques from %d outcomes",
        graph.n, params.p, params.m, len(items), len(outcomes),
    )
    return result


def dense_load_profile(result: DenseExactResult) -> LoadProfile:
    """Loads of the emitted cover, plus the degenerate mass when it is kept."""
    profile = load_profile(result.cover)
    if not result.keep_degenerate:
        return profile
    loads = list(profile.loads)
    for mass in result.degenerate:
        for v in mass.vertices:
            loads[v] += mass.weight
    return LoadProfile(loads=tuple(loads), max_load=max(loads, default=Fraction(0)))


def _stderr(probability: float, samples: int) -> float:
    return math.sqrt(max(probability * (1 - probability), 0.0) / samples)


def _deviates(frequency: float, expected: float, stderr: float, z: float) -> bool:
    return abs(frequency - expected) > z * stderr + 1e-12


def dense_mc(
    graph: Hypergraph,
    params: DenseParams,
    samples: int,
    seed: int = 0,
    z_threshold: float | None = None,
    threads: int = 1,
) -> DenseMCReport:
    if samples < 1:
        raise PreconditionError(f"samples={samples} must be at least 1")
    _check_graph(graph, params)
    z = float(settings.get("MC_Z_THRESHOLD", 4) if z_threshold is None else z_threshold)
    chunk = int(settings.get("MC_CHUNK_SIZE", 8192))
    sizes = [min(chunk, samples - start) for start in range(0, samples, chunk)]
    streams = np.random.SeedSequence(seed).spawn(len(sizes))

    nonadjacent, rates = _sampler_tables(graph, params)
    p = float(params.p)
    left = np.array([e[0] for e in graph.edges], dtype=np.intp)
    right = np.array([e[1] for e in graph.edges], dtype=np.intp)

    def tally(index: int) -> tuple[np.ndarray, np.ndarray]:
        rng = np.random.Generator(np.random.PCG64(streams[index]))
        in_a, in_b = _draw(rng, p, nonadjacent, rates, sizes[index])
        covered = (in_a[:, left] & in_b[:, right]) | (in_a[:, right] & in_b[:, left])
        return covered.sum(axis=0), (in_a | in_b).sum(axis=0)

    edge_hits = np.zeros(len(graph.edges), dtype=np.int64)
    vertex_hits = np.zeros(graph.n, dtype=np.int64)
    for edges_covered, members in ordered_map(tally, range(len(sizes)), threads):
        edge_hits += edges_covered
        vertex_hits += members

    edge_expected = float(params.normalization)
    vertex_expected = float(params.membership_probability)
    edge_stderr = _stderr(edge_expected, samples)
    vertex_stderr = _stderr(vertex_expected, samples)
    edge_frequency = {e: int(h) / samples for e, h in zip(graph.edges, edge_hits)}
    vertex_frequency = tuple(int(h) / samples for h in vertex_hits)

    report = DenseMCReport(
        samples=samples,
        seed=seed,
        z_threshold=z,
        edge_expected=edge_expected,
        edge_stderr=edge_stderr,
        edge_frequency=edge_frequency,
        vertex_expected=vertex_expected,
        vertex_stderr=vertex_stderr,
        vertex_frequency=vertex_frequency,
        flagged_edges=tuple(
            e for e, f in edge_frequency.items() if _deviates(f, edge_expected, edge_stderr, z)
        ),
        flagged_vertices=tuple(
            v for v, f in enumerate(vertex_frequency) if _deviates(f, vertex_expected, vertex_stderr, z)
        ),
    )
    if not report.ok:
        logger.warning(
            "dense_mc: %d edge(s), %d vertex(es) beyond %.1f standard errors",
            len(report.flagged_edges), len(report.flagged_vertices), z,
        )
    return report


def _projections(host: Hypergraph) -> list[tuple[tuple[int, ...], tuple[int, ...], Hypergraph]]:
    """(A, host index of each kept vertex, G_A without isolated vertices), sorted by A."""
    if host.d == 2:
        # a graph is its own projection; isolated vertices stay
        return [((), tuple(range(host.n)), host)]
    family = ProjectionFamily.of(host)
    found = []
    for a_set in family.sets:
        projected = family.graph(a_set)
        kept = tuple(v for v, degree in enumerate(projected.degrees) if degree)
        local = {v: i for i, v in enumerate(kept)}
        graph = Hypergraph.of(len(kept), ((local[u], local[v]) for u, v in projected.edges))
        found.append((a_set, kept, graph))
    return found


def _check_projection(a_set: tuple[int, ...], kept: tuple[int, ...], graph: Hypergraph, m: int) -> None:
    floor = graph.n - m
    for v, degree in enumerate(graph.degrees):
        if degree < floor:
            witness = tuple(sorted(a_set + (kept[v],)))
            raise PreconditionError(
                f"(d-1)-set {witness} lies in {degree} edges; its projection needs n_A - m = {floor}"
            )


def lifted_closed_form_loads(host: Hypergraph, params: DenseParams) -> tuple[Fraction, ...]:
    """Exact loads of dense_hyper with degenerate mass kept."""
    scale = Fraction(1, comb(host.d, 2))
    loads = [Fraction(0)] * host.n
    for a_set, kept, _ in _projections(host):
        for v in a_set:
            loads[v] += params.total_weight * scale
        for v in kept:
            loads[v] += params.target_load * scale
    return tuple(loads)


def dense_hyper(
    host: Hypergraph,
    params: DenseParams,
    method: DenseMethod = DenseMethod.EXACT,
    keep_degenerate: bool = False,
    samples: int = 100_000,
    seed: int = 0,
    z_threshold: float | None = None,
    limit: int | None = None,
    threads: int = 1,
) -> DenseExactResult | DenseHyperMCReport:
    if host.d == 2 and method is DenseMethod.EXACT:
        return dense_exact(host, params, keep_degenerate, limit, threads)
    projections = _projections(host)
    for a_set, kept, graph in projections:
        _check_projection(a_set, kept, graph, params.m)

    if method is DenseMethod.MC:
        reports = ordered_map(
            lambda entry: dense_mc(entry[2], params, samples, seed, z_threshold),
            projections,
            threads,
        )
        return DenseHyperMCReport(
            projections=tuple(
                ProjectionMCReport(projection=a_set, vertices=kept, report=report)
                for (a_set, kept, _), report in zip(projections, reports)
            )
        )

    results = ordered_map(
        lambda entry: dense_exact(entry[2], params, keep_degenerate, limit),
        projections,
        threads,
    )
    scale = Fraction(1, comb(host.d, 2))
    items: list[tuple[Cuph, Fraction]] = []
    masses: list[DegenerateMass] = []
    for (a_set, kept, _), sub in zip(projections, results):
        singletons = tuple((a,) for a in a_set)
        for item in sub.cover.items:
            parts = tuple(tuple(kept[v] for v in part) for part in item.cuph.parts)
            items.append((Cuph(d=host.d, parts=parts + singletons), item.weight * scale))
        for mass in sub.degenerate:
            vertices = tuple(sorted(a_set + tuple(kept[v] for v in mass.vertices)))
            masses.append(DegenerateMass(vertices=vertices, weight=mass.weight * scale))
        logger.debug("A=%s: %d vertices, %d bicliques", a_set, len(kept), len(sub.cover.items))

    logger.info(
        "dense_hyper n=%d d=%d p=%s m=%d: %d cuphs over %d projections",
        host.n, host.d, params.p, params.m, len(items), len(projections),
    )
    return DenseExactResult(
        params=params,
        cover=WeightedCover.build(host, items, mode=Mode.PARTITION, family=Family.CB),
        degenerate=tuple(masses),
        keep_degenerate=keep_degenerate,
    )
