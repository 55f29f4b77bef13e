"""Exact min-max-load covers and partitions over a full cuph catalog.

The fractional optimum is the linear program

    minimize r  subject to  sum_{F contains e} w_F >= 1 (cover) or = 1 (partition),
                            sum_{F contains v} w_F <= r,  w >= 0.

The integral optimum is found by best-first branch-and-bound. A node fixes
some cuphs to 1 and bans others; its bound is the ceiling of the LP over the
remaining columns. Branching picks an uncovered edge and opens one child per
cuph containing it: child i takes cuph i and bans the ones before it.
"""
import heapq
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from cuphcover.core.config import settings
from cuphcover.core.errors import LimitExceededError
from cuphcover.schemas.cover import WeightedCover
from cuphcover.schemas.enums import Family, Mode, Relax
from cuphcover.schemas.hypergraph import Hypergraph
from cuphcover.schemas.oracle import LPStatus, OracleResult, Sense, SubgraphCatalog
from cuphcover.services.catalog import enumerate_family
from cuphcover.services.lp import LinearProgram

logger = logging.getLogger(__name__)


@dataclass
class _Instance:
    catalog: SubgraphCatalog
    mode: Mode
    column_edges: list[frozenset[int]]
    column_vertices: list[tuple[int, ...]]

    @classmethod
    def of(cls, catalog: SubgraphCatalog, mode: Mode) -> "_Instance":
        edges: list[set[int]] = [set() for _ in catalog.cuphs]
        for index, edge in enumerate(catalog.host.edges):
            for j in catalog.edge_incidence[edge]:
                edges[j].add(index)
        return cls(
            catalog=catalog,
            mode=mode,
            column_edges=[frozenset(found) for found in edges],
            column_vertices=[tuple(sorted(cuph.vertices)) for cuph in catalog.cuphs],
        )

    @property
    def edge_count(self) -> int:
        return len(self.catalog.host.edges)

    @property
    def n(self) -> int:
        return self.catalog.host.n


@dataclass
class _Relaxation:
    feasible: bool
    value: Fraction | None = None
    weights: dict[int, Fraction] | None = None
    uncovered: tuple[int, ...] = ()
    free: tuple[int, ...] = ()
    pivots: int = 0


def _relax(instance: _Instance, fixed: frozenset[int], banned: frozenset[int]) -> _Relaxation:
    """LP over the columns that are neither fixed nor banned, with fixed loads as offsets."""
    loads = [0] * instance.n
    covered: set[int] = set()
    for j in fixed:
        covered |= instance.column_edges[j]
        for v in instance.column_vertices[j]:
            loads[v] += 1
    uncovered = tuple(e for e in range(instance.edge_count) if e not in covered)
    open_edges = set(uncovered)

    free = [
        j
        for j in range(len(instance.column_edges))
        if j not in fixed
        and j not in banned
        and instance.column_edges[j] & open_edges
        and (instance.mode is Mode.COVER or not instance.column_edges[j] & covered)
    ]

    program = LinearProgram()
    variables = {j: program.add_variable(0) for j in free}
    r = program.add_variable(1)
    by_edge: dict[int, dict[int, int]] = {e: {} for e in uncovered}
    by_vertex: list[dict[int, int]] = [{} for _ in range(instance.n)]
    for j in free:
        for e in instance.column_edges[j]:
            if e in by_edge:
                by_edge[e][variables[j]] = 1
        for v in instance.column_vertices[j]:
            by_vertex[v][variables[j]] = 1
    if any(not row for row in by_edge.values()):
        return _Relaxation(feasible=False)

    edge_sense = Sense.GE if instance.mode is Mode.COVER else Sense.EQ
    for row in by_edge.values():
        program.add_constraint(row, edge_sense, 1)
    for v, row in enumerate(by_vertex):
        program.add_constraint({**row, r: -1}, Sense.LE, -loads[v])

    solution = program.solve()
    if solution.status is not LPStatus.OPTIMAL:
        return _Relaxation(feasible=False, pivots=solution.pivots)
    weights = {j: solution.x[variables[j]] for j in free if solution.x[variables[j]] > 0}
    return _Relaxation(
        feasible=True,
        value=solution.objective,
        weights=weights,
        uncovered=uncovered,
        free=tuple(free),
        pivots=solution.pivots,
    )


def _max_load(instance: _Instance, chosen: list[int] | frozenset[int]) -> int:
    loads = [0] * instance.n
    for j in chosen:
        for v in instance.column_vertices[j]:
            loads[v] += 1
    return max(loads, default=0)


def _greedy(instance: _Instance) -> list[int] | None:
    """Add the column that keeps the max load lowest, then covers the most new edges."""
    loads = [0] * instance.n
    covered: set[int] = set()
    chosen: list[int] = []
    while len(covered) < instance.edge_count:
        best_key, best = None, None
        for j, edges in enumerate(instance.column_edges):
            new = len(edges - covered)
            if not new or (instance.mode is Mode.PARTITION and edges & covered):
                continue
            peak = max([loads[v] + 1 for v in instance.column_vertices[j]] + [max(loads, default=0)])
            key = (peak, -new, j)
            if best_key is None or key < best_key:
                best_key, best = key, j
        if best is None:
            return None
        chosen.append(best)
        covered |= instance.column_edges[best]
        for v in instance.column_vertices[best]:
            loads[v] += 1
    return chosen


def _certificate(instance: _Instance, weights: dict[int, Fraction], family: Family) -> WeightedCover:
    return WeightedCover.build(
        instance.catalog.host,
        ((instance.catalog.cuphs[j], w) for j, w in sorted(weights.items())),
        mode=instance.mode,
        family=family,
    )


def _solve_fractional(instance: _Instance, family: Family) -> OracleResult:
    relaxation = _relax(instance, frozenset(), frozenset())
    if not relaxation.feasible:
        return OracleResult(
            value=None, certificate=None, mode=instance.mode, family=family,
            relax=Relax.FRACTIONAL, columns=len(instance.column_edges), pivots=relaxation.pivots,
        )
    return OracleResult(
        value=relaxation.value,
        certificate=_certificate(instance, relaxation.weights, family),
        mode=instance.mode,
        family=family,
        relax=Relax.FRACTIONAL,
        columns=len(instance.column_edges),
        pivots=relaxation.pivots,
    )


def _solve_integral(instance: _Instance, family: Family, node_limit: int) -> OracleResult:
    greedy = _greedy(instance)
    incumbent = frozenset(greedy) if greedy is not None else None
    best = _max_load(instance, incumbent) if incumbent is not None else None
    logger.debug("greedy incumbent: %s", best)

    tiebreak = count()
    heap: list[tuple[int, int, frozenset[int], frozenset[int], _Relaxation]] = []
    nodes, pivots = 0, 0

    def push(fixed: frozenset[int], banned: frozenset[int]) -> None:
        nonlocal nodes, pivots
        nodes += 1
        if nodes > node_limit:
            raise LimitExceededError("BNB_NODE_LIMIT", node_limit, nodes)
        relaxation = _relax(instance, fixed, banned)
        pivots += relaxation.pivots
        if not relaxation.feasible:
            return
        bound = math.ceil(relaxation.value)
        if best is None or bound < best:
            heapq.heappush(heap, (bound, next(tiebreak), fixed, banned, relaxation))

    push(frozenset(), frozenset())
    while heap:
        bound, _, fixed, banned, relaxation = heapq.heappop(heap)
        if best is not None and bound >= best:
            break
        rounded = {j for j, w in relaxation.weights.items() if w >= 1}
        covered_by_rounded = set().union(*(instance.column_edges[j] for j in rounded))
        branch_edge = next((e for e in relaxation.uncovered if e not in covered_by_rounded), None)
        if branch_edge is None:
            solution = fixed | rounded
            load = _max_load(instance, solution)
            if best is None or load < best:
                best, incumbent = load, solution
                logger.debug("incumbent %d after %d nodes", best, nodes)
            continue

        weights = relaxation.weights
        candidates = sorted(
            (j for j in relaxation.free if branch_edge in instance.column_edges[j]),
            key=lambda j: (-weights.get(j, 0), j),
        )
        for i, j in enumerate(candidates):
            push(fixed | {j}, banned | frozenset(candidates[:i]))

    logger.info("branch-and-bound: value %s after %d nodes, %d pivots", best, nodes, pivots)
    certificate = (
        _certificate(instance, {j: Fraction(1) for j in incumbent}, family) if incumbent is not None else None
    )
    return OracleResult(
        value=Fraction(best) if best is not None else None,
        certificate=certificate,
        mode=instance.mode,
        family=family,
        relax=Relax.INTEGRAL,
        columns=len(instance.column_edges),
        pivots=pivots,
        nodes=nodes,
    )


def opt_load(
    host: Hypergraph,
    family: Family = Family.CB,
    mode: Mode = Mode.PARTITION,
    relax: Relax = Relax.FRACTIONAL,
    limit: int | None = None,
    node_limit: int | None = None,
    threads: int = 1,
    catalog: SubgraphCatalog | None = None,
) -> OracleResult:
    """vc, vp, vc* or vp* of `host` over the family, with a certificate; value None means +inf."""
    if catalog is None or catalog.host != host or catalog.family is not family:
        catalog = enumerate_family(host, family, limit, threads)
    if not host.edges:
        return OracleResult(
            value=Fraction(0),
            certificate=WeightedCover(host=host, mode=mode, family=family),
            mode=mode,
            family=family,
            relax=relax,
        )

    instance = _Instance.of(catalog, mode)
    if relax is Relax.FRACTIONAL:
        result = _solve_fractional(instance, family)
    else:
        node_limit = int(settings.get("BNB_NODE_LIMIT", 200000) if node_limit is None else node_limit)
        result = _solve_integral(instance, family, node_limit)
    logger.info(
        "opt_load n=%d %s/%s/%s over %d cuphs: %s",
        host.n, family.value, mode.value, relax.value, len(catalog.cuphs), result.value,
    )
    return result
