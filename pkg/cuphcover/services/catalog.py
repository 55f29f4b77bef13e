"""Exhaustive enumeration of cuph subhypergraphs.

Vertices are visited in increasing order and each one is skipped, put into
an existing part, or opens a new part. Parts are therefore ordered by their
smallest vertex, which makes every cuph appear exactly once. A placement is
kept only if every edge it creates is a host edge; edges only accumulate as
vertices are added, so rejected branches never recover.
"""
import logging
from fractions import Fraction
from itertools import combinations, product

from cuphcover.core.config import settings
from cuphcover.core.errors import LimitExceededError
from cuphcover.core.parallel import ordered_map
from cuphcover.schemas.enums import Family
from cuphcover.schemas.hypergraph import Cuph, Hypergraph
from cuphcover.schemas.oracle import SubgraphCatalog
from cuphcover.services.coverage import cuph_edges

logger = logging.getLogger(__name__)


def family_limit(host: Hypergraph, family: Family) -> tuple[str, int]:
    if host.d > 2:
        return "HYPER_LIMIT", int(settings.get("HYPER_LIMIT", 8))
    if family is Family.CB:
        return "CB_GRAPH_LIMIT", int(settings.get("CB_GRAPH_LIMIT", 12))
    return "CM_GRAPH_LIMIT", int(settings.get("CM_GRAPH_LIMIT", 10))


def check_limit(host: Hypergraph, family: Family, limit: int | None = None) -> None:
    name, default = family_limit(host, family)
    limit = default if limit is None else limit
    if host.n > limit:
        raise LimitExceededError(name, limit, host.n)


def _cuphs_from(host: Hypergraph, family: Family, start: int) -> list[Cuph]:
    """Cuphs whose smallest vertex is `start`, in search order."""
    n, d = host.n, host.d
    max_parts = d if family is Family.CB else n
    adjacency = host.adjacency if d == 2 else ()
    edge_set = host.edge_set

    parts: list[list[int]] = [[start]]
    masks: list[int] = [1 << start]
    found: list[Cuph] = []

    def compatible(v: int, j: int) -> bool:
        if d == 2:
            others = 0
            for i, mask in enumerate(masks):
                if i != j:
                    others |= mask
            return others & ~adjacency[v] == 0
        others = [part for i, part in enumerate(parts) if i != j]
        for chosen in combinations(others, d - 1):
            for pick in product(*chosen):
                if tuple(sorted(pick + (v,))) not in edge_set:
                    return False
        return True

    def extend(v: int) -> None:
        if v == n:
            complete = len(parts) == d if family is Family.CB else len(parts) >= d
            if complete:
                found.append(Cuph(d=d, parts=tuple(tuple(part) for part in parts)))
            return
        extend(v + 1)
        for j in range(len(parts)):
            if compatible(v, j):
                parts[j].append(v)
                masks[j] |= 1 << v
                extend(v + 1)
                parts[j].pop()
                masks[j] &= ~(1 << v)
        if len(parts) < max_parts and compatible(v, len(parts)):
            parts.append([v])
            masks.append(1 << v)
            extend(v + 1)
            parts.pop()
            masks.pop()

    extend(start + 1)
    return found


def iter_cuphs(host: Hypergraph, family: Family, limit: int | None = None, threads: int = 1) -> list[Cuph]:
    check_limit(host, family, limit)
    if not host.edges:
        return []
    per_start = ordered_map(lambda start: _cuphs_from(host, family, start), range(host.n), threads)
    return [cuph for found in per_start for cuph in found]


def enumerate_family(
    host: Hypergraph, family: Family, limit: int | None = None, threads: int = 1
) -> SubgraphCatalog:
    cuphs = iter_cuphs(host, family, limit, threads)
    edge_incidence: dict[tuple[int, ...], list[int]] = {edge: [] for edge in host.edges}
    vertex_incidence: list[list[int]] = [[] for _ in range(host.n)]
    for index, cuph in enumerate(cuphs):
        for edge in cuph_edges(cuph):
            edge_incidence[edge].append(index)
        for v in cuph.vertices:
            vertex_incidence[v].append(index)

    logger.info("enumerate_family n=%d d=%d %s: %d cuphs", host.n, host.d, family.value, len(cuphs))
    return SubgraphCatalog(
        host=host,
        family=family,
        cuphs=tuple(cuphs),
        edge_incidence={edge: tuple(found) for edge, found in edge_incidence.items()},
        vertex_incidence=tuple(tuple(sorted(found)) for found in vertex_incidence),
    )


def max_cuph_density(
    host: Hypergraph, limit: int | None = None, threads: int = 1
) -> tuple[Fraction, Cuph | None]:
    """Largest |edges|/|vertices| over CM subhypergraphs; (0, None) without edges."""
    best, witness = Fraction(0), None
    for cuph in iter_cuphs(host, Family.CM, limit, threads):
        value = Fraction(cuph.edge_count, len(cuph.vertices))
        if value > best:
            best, witness = value, cuph
    return best, witness
