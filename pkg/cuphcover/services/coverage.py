"""Edge sets of cuphs and the coverage/load semantics of weighted covers."""
import logging
from fractions import Fraction
from itertools import combinations, product

from cuphcover.core.errors import PreconditionError
from cuphcover.schemas.cover import CoverageReport, LoadProfile, WeightedCover
from cuphcover.schemas.hypergraph import Cuph, Edge, Hypergraph

logger = logging.getLogger(__name__)


def cuph_edges(cuph: Cuph) -> frozenset[Edge]:
    """The d-sets meeting d distinct parts in one vertex each."""
    return frozenset(
        tuple(sorted(pick))
        for chosen in combinations(cuph.parts, cuph.d)
        for pick in product(*chosen)
    )


def validate_cover(cover: WeightedCover) -> CoverageReport:
    host_edges = cover.host.edge_set
    totals: dict[Edge, Fraction] = {edge: Fraction(0) for edge in cover.host.edges}
    foreign: list[int] = []

    for index, item in enumerate(cover.items):
        edges = cuph_edges(item.cuph)
        if not edges <= host_edges:
            foreign.append(index)
        for edge in edges & host_edges:
            totals[edge] += item.weight

    under = tuple(e for e, w in totals.items() if w < 1)
    over = tuple(e for e, w in totals.items() if w > 1)
    if foreign:
        logger.warning("%d item(s) are not subhypergraphs of the host", len(foreign))

    is_cover = not under and not foreign
    return CoverageReport(
        totals=totals,
        min_coverage=min(totals.values(), default=None),
        max_coverage=max(totals.values(), default=None),
        under_covered=under,
        over_covered=over,
        foreign_items=tuple(foreign),
        is_cover=is_cover,
        is_partition=is_cover and not over,
    )


def load_profile(cover: WeightedCover) -> LoadProfile:
    """Load of v: total weight of items with v in some partite set."""
    loads = [Fraction(0)] * cover.host.n
    for item in cover.items:
        for v in item.cuph.vertices:
            loads[v] += item.weight
    return LoadProfile(loads=tuple(loads), max_load=max(loads, default=Fraction(0)))


def density(host: Hypergraph) -> Fraction:
    if host.n == 0:
        raise PreconditionError("density is undefined on 0 vertices")
    return Fraction(len(host.edges), host.n)
