"""Lift graph biclique partitions to d-uniform hypergraphs.

A d-cuph is a biclique (S, T) of an auxiliary graph plus the d-2 singletons
of a (d-2)-set A. The integral lift splits every edge as A(e) + B(e) and
partitions each G_A = (V, {B(e) : A(e) = A}). The fractional lift uses every
(d-2)-subset of every edge, so each edge is seen C(d,2) times and each
weight is divided by C(d,2).
"""
import logging
from fractions import Fraction
from math import comb

from cuphcover.core.errors import PreconditionError
from cuphcover.core.parallel import ordered_map
from cuphcover.schemas.construction import EdgeSplit, ProjectionFamily
from cuphcover.schemas.cover import WeightedCover
from cuphcover.schemas.enums import Family, Mode
from cuphcover.schemas.hypergraph import Cuph, Hypergraph
from cuphcover.services.ep import (
    ep_fractional,
    ep_partition,
    fractional_load_bound,
    partition_count_bound,
    partition_load_bound,
)

logger = logging.getLogger(__name__)


def _comb(n: int, r: int) -> int:
    return comb(n, r) if r >= 0 else 0


def lift_partition_load_bound(n: int, d: int, k: int) -> Fraction:
    return (
        _comb(n - 1, d - 3) * partition_count_bound(n, k)
        + _comb(n - 1, d - 2) * partition_load_bound(n, k)
    )


def lift_fractional_load_bound(n: int, d: int, k: int) -> Fraction:
    per_vertex = (
        _comb(n - 1, d - 3) * partition_count_bound(n, k)
        + _comb(n - 1, d - 2) * fractional_load_bound(n, k)
    )
    return per_vertex / comb(d, 2)


def lift_cuph(graph_cuph: Cuph, a_set: tuple[int, ...], d: int) -> Cuph:
    return Cuph(d=d, parts=graph_cuph.parts + tuple((a,) for a in a_set))


def _check_k(host: Hypergraph, k: int) -> None:
    if not 1 <= k <= host.n:
        raise PreconditionError(f"k={k} out of range 1..{host.n}")


def hyper_partition(
    host: Hypergraph, k: int, split: EdgeSplit | None = None, threads: int = 1
) -> WeightedCover:
    _check_k(host, k)
    split = split or EdgeSplit.lowest(host)
    if split.d != host.d or set(split.a_sets) != host.edge_set:
        raise PreconditionError("edge split does not match the hypergraph's edges")

    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for edge in host.edges:
        groups.setdefault(split.a_sets[edge], []).append(split.b_set(edge))

    def lift_group(a_set: tuple[int, ...]) -> list[Cuph]:
        sub = ep_partition(Hypergraph.of(host.n, groups[a_set]), k)
        logger.debug("A=%s: %d bicliques", a_set, len(sub.items))
        return [lift_cuph(item.cuph, a_set, host.d) for item in sub.items]

    lifted = ordered_map(lift_group, sorted(groups), threads)
    cover = WeightedCover.build(
        host,
        ((cuph, 1) for found in lifted for cuph in found),
        mode=Mode.PARTITION,
        family=Family.CB,
    )
    logger.info("hyper_partition n=%d d=%d k=%d: %d cuphs", host.n, host.d, k, len(cover.items))
    return cover


def hyper_fractional(host: Hypergraph, k: int, threads: int = 1) -> WeightedCover:
    _check_k(host, k)
    projections = ProjectionFamily.of(host)
    scale = Fraction(1, comb(host.d, 2))

    def lift_projection(a_set: tuple[int, ...]) -> list[tuple[Cuph, Fraction]]:
        sub = ep_fractional(projections.graph(a_set), k)
        return [(lift_cuph(item.cuph, a_set, host.d), item.weight * scale) for item in sub.items]

    lifted = ordered_map(lift_projection, list(projections.sets), threads)
    cover = WeightedCover.build(
        host,
        (pair for found in lifted for pair in found),
        mode=Mode.PARTITION,
        family=Family.CB,
    )
    logger.info("hyper_fractional n=%d d=%d k=%d: %d cuphs", host.n, host.d, k, len(cover.items))
    return cover
