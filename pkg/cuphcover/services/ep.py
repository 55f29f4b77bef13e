"""Biclique partitions of graphs with load at most 2^(k-1) + ceil(n/k).

Vertices are split into classes of at most k vertices. For a class H and
a nonempty S inside H, the biclique (S, T_S) collects every vertex whose
out-neighbourhood meets H exactly in S. Every edge lands in exactly one such
biclique: the one of the class of its head, with S the tail's out-neighbours
in that class. The fractional variant uses full neighbourhoods, so every
edge lands in exactly two bicliques, each weighted 1/2.
"""
import logging
import math
from fractions import Fraction

from cuphcover.core.errors import PreconditionError
from cuphcover.core.parallel import ordered_map
from cuphcover.schemas.construction import ClassPartition, Orientation
from cuphcover.schemas.cover import WeightedCover
from cuphcover.schemas.enums import Family, Mode
from cuphcover.schemas.hypergraph import Cuph, Hypergraph, mask_vertices

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def default_k(n: int) -> int:
    """ceil(log n - 2 log log n), clamped into 1..n."""
    if n < 1:
        raise PreconditionError(f"n={n} must be at least 1")
    if n <= 2:
        return 1
    log_n = math.log2(n)
    return max(1, min(n, math.ceil(log_n - 2 * math.log2(log_n))))


def partition_count_bound(n: int, k: int) -> Fraction:
    return Fraction(2**k * n, k)


def partition_load_bound(n: int, k: int) -> Fraction:
    return Fraction(2 ** (k - 1)) + math.ceil(n / k)


def fractional_load_bound(n: int, k: int) -> Fraction:
    return Fraction(2**k, 4) + Fraction(math.ceil(n / k), 2)


def _check(graph: Hypergraph, k: int) -> None:
    if graph.d != 2:
        raise PreconditionError(f"expected a graph (d=2), got d={graph.d}")
    if not 1 <= k <= graph.n:
        raise PreconditionError(f"k={k} out of range 1..{graph.n}")


def _class_bicliques(
    neighbourhoods: list[int], classes: ClassPartition, threads: int
) -> list[tuple[int, tuple[int, ...]]]:
    """(S mask, T_S) for every class and nonempty S with nonempty T_S, class order."""

    def per_class(members: tuple[int, ...]) -> list[tuple[int, tuple[int, ...]]]:
        class_mask = sum(1 << v for v in members)
        groups: dict[int, list[int]] = {}
        for v, mask in enumerate(neighbourhoods):
            s_mask = mask & class_mask
            if s_mask:
                groups.setdefault(s_mask, []).append(v)
        return [(s_mask, tuple(groups[s_mask])) for s_mask in sorted(groups)]

    per_class_results = ordered_map(per_class, classes.classes, threads)
    return [biclique for found in per_class_results for biclique in found]


def _resolve_classes(graph: Hypergraph, k: int, classes: ClassPartition | None) -> ClassPartition:
    classes = classes or ClassPartition.consecutive(graph.n, k)
    if classes.n != graph.n or classes.k != k:
        raise PreconditionError(f"class partition is for n={classes.n}, k={classes.k}")
    return classes


def ep_partition(
    graph: Hypergraph,
    k: int,
    orientation: Orientation | None = None,
    classes: ClassPartition | None = None,
    threads: int = 1,
) -> WeightedCover:
    _check(graph, k)
    orientation = orientation or Orientation.low_to_high(graph)
    if set(orientation.tails) != graph.edge_set:
        raise PreconditionError("orientation does not match the graph's edges")
    classes = _resolve_classes(graph, k, classes)

    out_neighbourhoods = [0] * graph.n
    for edge in graph.edges:
        out_neighbourhoods[orientation.tails[edge]] |= 1 << orientation.head(edge)

    bicliques = _class_bicliques(out_neighbourhoods, classes, threads)
    cover = WeightedCover.build(
        graph,
        ((Cuph(d=2, parts=(mask_vertices(s_mask), tails)), 1) for s_mask, tails in bicliques),
        mode=Mode.PARTITION,
        family=Family.CB,
    )
    logger.info("ep_partition n=%d k=%d: %d bicliques", graph.n, k, len(cover.items))
    return cover


def ep_fractional(
    graph: Hypergraph,
    k: int,
    classes: ClassPartition | None = None,
    threads: int = 1,
) -> WeightedCover:
    _check(graph, k)
    classes = _resolve_classes(graph, k, classes)

    bicliques = _class_bicliques(list(graph.adjacency), classes, threads)
    cover = WeightedCover.build(
        graph,
        ((Cuph(d=2, parts=(mask_vertices(s_mask), others)), HALF) for s_mask, others in bicliques),
        mode=Mode.PARTITION,
        family=Family.CB,
    ).merged()
    logger.info("ep_fractional n=%d k=%d: %d bicliques after merging", graph.n, k, len(cover.items))
    return cover
