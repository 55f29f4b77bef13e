"""Hypergraph/cuph models, coverage and load semantics, and the exact-rational helpers."""
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from conftest import graphs
from cuphcover.core.errors import PreconditionError
from cuphcover.core.parallel import ordered_map
from cuphcover.core.rational import dyadic, format_fraction, log_ratio_floor, parse_fraction, render
from cuphcover.schemas.cover import WeightedCover
from cuphcover.schemas.enums import Family, Mode
from cuphcover.schemas.hypergraph import Cuph, Hypergraph, mask_vertices
from cuphcover.services import families
from cuphcover.services.coverage import cuph_edges, density, load_profile, validate_cover
from cuphcover.services.ep import ep_partition

HALF = Fraction(1, 2)


def brute_force_edges(cuph: Cuph) -> set[tuple[int, ...]]:
    owner = {v: i for i, part in enumerate(cuph.parts) for v in part}
    return {
        edge
        for edge in combinations(sorted(owner), cuph.d)
        if len({owner[v] for v in edge}) == cuph.d
    }


def naive_totals(cover: WeightedCover) -> dict[tuple[int, ...], Fraction]:
    totals = {}
    for edge in cover.host.edges:
        totals[edge] = sum(
            (item.weight for item in cover.items if edge in brute_force_edges(item.cuph)), Fraction(0)
        )
    return totals


# -------------------------------------------------------
# Hypergraph and cuph invariants
# -------------------------------------------------------
def test_hypergraph_canonicalizes_edges():
    host = Hypergraph.of(4, [(3, 1), (0, 2)])
    assert host.edges == ((0, 2), (1, 3))
    assert host.degrees == (1, 1, 1, 1)
    assert host.adjacency == (0b0100, 0b1000, 0b0001, 0b0010)


@pytest.mark.parametrize(
    "edges, d",
    [
        ([(0, 1), (1, 0)], 2),
        ([(0, 0)], 2),
        ([(0, 4)], 2),
        ([(0, 1)], 3),
    ],
)
def test_hypergraph_rejects_malformed_edges(edges, d):
    with pytest.raises(ValidationError):
        Hypergraph.of(4, edges, d=d)


def test_empty_hypergraph_is_truthy():
    assert Hypergraph(n=0)
    assert Hypergraph(n=3).min_degree() == 0


def test_cuph_canonical_form():
    assert Cuph.of((3, 2), (1,)).parts == ((1,), (2, 3))
    assert Cuph.of((3, 2), (1,)) == Cuph.of((1,), (2, 3))


@pytest.mark.parametrize(
    "parts, d",
    [
        (((0,), ()), 2),
        (((0, 1), (1, 2)), 2),
        (((0,), (1,)), 3),
        (((0,),), 2),
    ],
)
def test_cuph_rejects_bad_parts(parts, d):
    with pytest.raises(ValidationError):
        Cuph(d=d, parts=parts)


def test_mask_vertices():
    assert mask_vertices(0) == ()
    assert mask_vertices(0b10110) == (1, 2, 4)


# -------------------------------------------------------
# cuph_edges
# -------------------------------------------------------
def test_cuph_edges_examples():
    assert cuph_edges(Cuph.of((0,), (1,))) == {(0, 1)}
    assert cuph_edges(Cuph.of((0, 1), (2, 3))) == {(0, 2), (0, 3), (1, 2), (1, 3)}
    assert cuph_edges(Cuph.of((0, 1), (2,), (3,), d=3)) == {(0, 2, 3), (1, 2, 3)}
    assert cuph_edges(Cuph.of((0,), (1,), (2,), (3,), d=3)) == set(combinations(range(4), 3))


@pytest.mark.property_based
@given(
    st.integers(2, 4).flatmap(
        lambda d: st.tuples(
            st.just(d),
            st.lists(st.integers(0, 9), min_size=d, max_size=10, unique=True),
            st.lists(st.integers(0, 5), min_size=10, max_size=10),
        )
    )
)
@settings(max_examples=150)
def test_cuph_edges_match_brute_force(drawn):
    """Edge count is the elementary symmetric polynomial of part sizes, and matches brute force."""
    d, vertices, labels = drawn
    groups: dict[int, list[int]] = {}
    for v, label in zip(vertices, labels):
        groups.setdefault(label, []).append(v)
    if len(groups) < d:
        return
    cuph = Cuph(d=d, parts=tuple(tuple(g) for g in groups.values()))
    edges = cuph_edges(cuph)
    assert edges == brute_force_edges(cuph)
    assert len(edges) == cuph.edge_count


# -------------------------------------------------------
# validate_cover / load_profile / density
# -------------------------------------------------------
def test_single_edge_partition(single_edge):
    cover = WeightedCover.build(single_edge, [(Cuph.of((0,), (1,)), 1)])
    report = validate_cover(cover)
    assert report.is_partition and report.is_cover
    assert report.totals == {(0, 1): 1}
    assert load_profile(cover).loads == (1, 1)


def test_weights_add_across_separate_items(single_edge):
    cuph = Cuph.of((0,), (1,))
    report = validate_cover(WeightedCover.build(single_edge, [(cuph, HALF), (cuph, HALF)]))
    assert report.totals[(0, 1)] == 1
    assert report.is_partition


def test_missing_edge_is_reported():
    k3 = families.complete(3)
    report = validate_cover(WeightedCover.build(k3, [(Cuph.of((0,), (1, 2)), 1)]))
    assert not report.is_cover
    assert report.under_covered == ((1, 2),)
    assert report.violations(Mode.COVER) == ((1, 2),)


def test_over_covered_edge_breaks_partition_only(single_edge):
    cuph = Cuph.of((0,), (1,))
    report = validate_cover(WeightedCover.build(single_edge, [(cuph, 1), (cuph, HALF)]))
    assert report.is_cover and not report.is_partition
    assert report.violations(Mode.PARTITION) == ((0, 1),)
    assert report.violations(Mode.COVER) == ()


def test_foreign_items_are_reported_not_raised():
    p3 = families.path(3)
    report = validate_cover(
        WeightedCover.build(p3, [(Cuph.of((0,), (1,)), 1), (Cuph.of((1,), (2,)), 1), (Cuph.of((0,), (2,)), 1)])
    )
    assert report.foreign_items == (2,)
    assert not report.is_cover and not report.is_partition


@pytest.mark.parametrize("stray", [7, 2, -1])
def test_items_must_stay_on_host_vertices(single_edge, stray):
    with pytest.raises(ValidationError, match="outside 0..1"):
        WeightedCover.build(single_edge, [(Cuph.of((0,), (stray,)), 1)])


def test_cb_cover_rejects_multipartite_items():
    with pytest.raises(ValidationError):
        WeightedCover.build(families.complete(3), [(Cuph.of((0,), (1,), (2,)), 1)], family=Family.CB)
    WeightedCover.build(families.complete(3), [(Cuph.of((0,), (1,), (2,)), 1)], family=Family.CM)


def test_weighted_loads_on_star():
    star = Hypergraph.of(3, [(0, 1), (0, 2)])
    cover = WeightedCover.build(star, [(Cuph.of((0,), (1,)), HALF), (Cuph.of((0,), (2,)), HALF)])
    assert load_profile(cover).loads == (1, HALF, HALF)


def test_k4_partition_loads_recomputed(k4):
    cover = ep_partition(k4, 2)
    assert load_profile(cover).loads == (2, 2, 2, 2)
    assert validate_cover(cover).is_partition


def test_density_examples(k4, single_edge):
    assert density(k4) == Fraction(3, 2)
    assert density(single_edge) == HALF
    assert density(families.complete(5, d=3)) == 2
    with pytest.raises(PreconditionError):
        density(Hypergraph(n=0))


def test_merged_combines_identical_cuphs(single_edge):
    cuph = Cuph.of((0,), (1,))
    merged = WeightedCover.build(single_edge, [(cuph, HALF), (cuph, HALF)]).merged()
    assert len(merged.items) == 1 and merged.items[0].weight == 1
    assert merged.is_integral and merged.total_weight == 1


@pytest.mark.property_based
@given(graphs(max_n=6), st.data())
@settings(max_examples=60, deadline=None)
def test_coverage_matches_naive_reference(host, data):
    """Totals and loads agree exactly with a direct double loop."""
    edges = list(host.edges)
    if not edges:
        return
    picks = data.draw(st.lists(st.sampled_from(edges), min_size=1, max_size=8))
    weights = data.draw(st.lists(st.fractions(min_value=Fraction(1, 6), max_value=2, max_denominator=6), min_size=len(picks), max_size=len(picks)))
    cover = WeightedCover.build(host, [(Cuph.of((u,), (v,)), w) for (u, v), w in zip(picks, weights)])
    assert validate_cover(cover).totals == naive_totals(cover)
    loads = [sum((w for (u, v), w in zip(picks, weights) if x in (u, v)), Fraction(0)) for x in range(host.n)]
    assert list(load_profile(cover).loads) == loads


# -------------------------------------------------------
# families
# -------------------------------------------------------
@pytest.mark.parametrize(
    "name, n, d, edges",
    [("K5", 5, 2, 10), ("C6", 6, 2, 6), ("P4", 4, 2, 3), ("K2,3", 5, 2, 6), ("K5^3", 5, 3, 10)],
)
def test_named_families(name, n, d, edges):
    host = families.named(name)
    assert (host.n, host.d, len(host.edges)) == (n, d, edges)


def test_unknown_family_name():
    with pytest.raises(PreconditionError):
        families.named("Q7")


# -------------------------------------------------------
# rational helpers and ordered_map
# -------------------------------------------------------
def test_fraction_parsing_and_rendering():
    assert parse_fraction("1/3") == Fraction(1, 3)
    assert parse_fraction("0.25") == Fraction(1, 4)
    assert format_fraction(Fraction(2)) == "2/1"
    assert render(Fraction(1, 4)) == "1/4 (0.250000)"
    assert render(None) == "inf"
    with pytest.raises(PreconditionError):
        parse_fraction("one half")


def test_dyadic_is_close():
    value = dyadic(0.1, bits=30)
    assert value.denominator <= 2**30
    assert abs(float(value) - 0.1) <= 2**-30


def test_log_ratio_floor_is_a_tight_lower_bound():
    bound = log_ratio_floor(Fraction(4), Fraction(2))
    assert bound < 2
    assert 2 - bound < Fraction(1, 10**30)
    with pytest.raises(PreconditionError):
        log_ratio_floor(Fraction(4), Fraction(1))


def test_ordered_map_preserves_order():
    items = list(range(50))
    assert ordered_map(lambda x: x * x, items, threads=4) == [x * x for x in items]
