"""Randomized dense construction: exact enumeration, sampling, and the hypergraph lift."""
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs, small_graphs
from cuphcover.core.errors import LimitExceededError, PreconditionError
from cuphcover.schemas.dense import DenseExactResult, DenseHyperMCReport, DenseParams
from cuphcover.schemas.enums import DenseMethod
from cuphcover.schemas.hypergraph import Hypergraph
from cuphcover.services import families
from cuphcover.services.coverage import load_profile, validate_cover
from cuphcover.services.dense import (
    default_p,
    dense_closed_form_load,
    dense_exact,
    dense_hyper,
    dense_load_profile,
    dense_mc,
    dense_params,
    lifted_closed_form_loads,
    outcome_probabilities,
    required_slack,
    sample_dense_batch,
    sample_dense_biclique,
)

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)


# -------------------------------------------------------
# parameters
# -------------------------------------------------------
@pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
def test_small_slack_uses_one_half(m):
    assert default_p(m) == HALF


@pytest.mark.parametrize("m, inverse", [(256, 184.665), (65536, 11818.6)])
def test_default_p_values(m, inverse):
    p = default_p(m)
    assert p.denominator & (p.denominator - 1) == 0
    assert 1 / float(p) == pytest.approx(inverse, abs=0.2)


@pytest.mark.parametrize("m, best", [(256, 3), (4096, 5), (65536, 7)])
def test_default_p_near_grid_minimum(m, best):
    loads = {j: dense_closed_form_load(4.0**-j, m) for j in range(1, 12)}
    assert min(loads, key=loads.get) == best
    assert abs(best + math.log(float(default_p(m)), 4)) <= 1


def test_closed_form_load_overflows_to_inf():
    assert dense_closed_form_load(0.5, 10**6) == math.inf
    assert dense_closed_form_load(0.5, 1) == pytest.approx(2.0)


def test_params_from_host(k4, c4):
    assert dense_params(k4) == DenseParams(p=HALF, m=1)
    assert required_slack(c4) == 2
    assert dense_params(c4, p=THIRD).p == THIRD
    with pytest.raises(PreconditionError):
        dense_params(k4, p=Fraction(1))
    with pytest.raises(PreconditionError):
        dense_params(k4, p=Fraction(0))


def test_params_closed_forms():
    params = DenseParams(p=THIRD, m=1)
    assert params.normalization == Fraction(4, 9)
    assert params.total_weight == Fraction(9, 4)
    assert params.target_load == Fraction(9, 4)
    assert params.membership_probability == 1


# -------------------------------------------------------
# exact enumeration
# -------------------------------------------------------
def test_single_edge_exact(single_edge):
    result = dense_exact(single_edge, DenseParams(p=HALF, m=1))
    assert [(item.cuph.parts, item.weight) for item in result.cover.items] == [(((0,), (1,)), 1)]
    assert [(mass.vertices, mass.weight) for mass in result.degenerate] == [((0, 1), 1)]
    assert load_profile(result.cover).max_load == 1

    kept = dense_exact(single_edge, DenseParams(p=HALF, m=1), keep_degenerate=True)
    assert kept.total_weight == 2
    assert dense_load_profile(kept).loads == (2, 2)


@pytest.mark.parametrize(
    "host, p, m, load",
    [
        (families.complete(3), THIRD, 1, Fraction(9, 4)),
        (families.cycle(4), HALF, 2, Fraction(3)),
        (families.complete(4), HALF, 1, Fraction(2)),
    ],
)
def test_kept_loads_equal_closed_form(host, p, m, load):
    params = DenseParams(p=p, m=m)
    result = dense_exact(host, params, keep_degenerate=True)
    assert params.target_load == load
    assert dense_load_profile(result).loads == (load,) * host.n
    assert result.total_weight == params.total_weight
    assert validate_cover(result.cover).is_partition


def test_probabilities_sum_to_one(c4):
    outcomes = outcome_probabilities(c4, DenseParams(p=THIRD, m=3))
    assert sum(outcomes.values()) == 1
    assert all(pr > 0 for pr in outcomes.values())


def test_exact_is_thread_count_independent():
    host = families.complete(8)
    params = dense_params(host)
    assert dense_exact(host, params, threads=1) == dense_exact(host, params, threads=4)


def test_exact_limit(k4):
    with pytest.raises(LimitExceededError) as excinfo:
        dense_exact(k4, DenseParams(p=HALF, m=1), limit=3)
    assert excinfo.value.limit_name == "DENSE_EXACT_LIMIT"


def test_degree_precondition():
    with pytest.raises(PreconditionError, match="vertex 0 has degree 1"):
        dense_exact(families.path(3), DenseParams(p=HALF, m=0))


def test_hypergraph_input_rejected():
    with pytest.raises(PreconditionError):
        dense_exact(families.complete(4, d=3), DenseParams(p=HALF, m=1))


@pytest.mark.property_based
@given(graphs(min_n=2, max_n=6), st.sampled_from([Fraction(1, 4), THIRD, HALF, Fraction(2, 3)]), st.integers(0, 2))
@settings(max_examples=40, deadline=None)
def test_exact_partition_for_any_graph(host, p, extra):
    """Every edge gets weight exactly 1 and kept loads match the closed form."""
    params = DenseParams(p=p, m=required_slack(host) + extra)
    result = dense_exact(host, params, keep_degenerate=True)
    assert validate_cover(result.cover).is_partition
    assert all(load == params.target_load for load in dense_load_profile(result).loads)


# -------------------------------------------------------
# sampling
# -------------------------------------------------------
def test_single_sample_is_a_biclique(k4):
    rng = np.random.default_rng(3)
    for _ in range(20):
        outcome = sample_dense_biclique(k4, DenseParams(p=HALF, m=1), rng)
        assert not set(outcome.a) & set(outcome.b)


def test_sample_frequencies_match_exact_distribution():
    """Chi-square with 7 degrees of freedom against the 0.999 quantile."""
    host = families.complete(3)
    params = DenseParams(p=THIRD, m=1)
    expected = outcome_probabilities(host, params)
    assert len(expected) == 8

    samples = 30000
    in_a, in_b = sample_dense_batch(host, params, np.random.default_rng(11), samples)
    weights = 1 << np.arange(host.n)
    observed: dict[tuple[int, int], int] = {}
    for a_mask, b_mask in zip((in_a @ weights).tolist(), (in_b @ weights).tolist()):
        observed[(a_mask, b_mask)] = observed.get((a_mask, b_mask), 0) + 1

    assert set(observed) <= set(expected)
    chi_square = sum(
        (observed.get(key, 0) - samples * float(pr)) ** 2 / (samples * float(pr))
        for key, pr in expected.items()
    )
    assert chi_square < 24.32


def test_monte_carlo_agrees_with_closed_form(c4):
    report = dense_mc(c4, DenseParams(p=HALF, m=2), samples=20000, seed=5)
    assert report.ok
    assert report.edge_expected == pytest.approx(0.25)
    assert report.vertex_expected == pytest.approx(0.75)
    assert set(report.edge_frequency) == set(c4.edges)


def test_monte_carlo_is_reproducible(k4):
    params = DenseParams(p=HALF, m=1)
    first = dense_mc(k4, params, samples=20000, seed=9, threads=1)
    assert first == dense_mc(k4, params, samples=20000, seed=9, threads=4)


def test_zero_threshold_flags_sampling_noise(k4):
    report = dense_mc(k4, DenseParams(p=HALF, m=1), samples=20000, seed=1, z_threshold=0.0)
    assert not report.ok
    assert report.flagged_edges
    # every vertex lands in A or B with probability 1 here
    assert report.flagged_vertices == ()
    assert report.vertex_frequency == (1.0,) * 4


def test_monte_carlo_needs_samples(k4):
    with pytest.raises(PreconditionError):
        dense_mc(k4, DenseParams(p=HALF, m=1), samples=0)


# -------------------------------------------------------
# hypergraph lift
# -------------------------------------------------------
def test_complete_triple_system_loads():
    host = families.complete(6, d=3)
    params = dense_params(host, p=THIRD)
    assert params.m == 1
    assert lifted_closed_form_loads(host, params) == (Fraction(9, 2),) * 6

    result = dense_hyper(host, params, keep_degenerate=True)
    assert isinstance(result, DenseExactResult)
    assert dense_load_profile(result).loads == (Fraction(9, 2),) * 6
    assert validate_cover(result.cover).is_partition


def test_lift_on_sparse_hypergraph():
    host = Hypergraph.of(5, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (0, 1, 4)], d=3)
    params = dense_params(host)
    result = dense_hyper(host, params, keep_degenerate=True)
    assert validate_cover(result.cover).is_partition
    assert dense_load_profile(result).loads == lifted_closed_form_loads(host, params)


def test_lift_monte_carlo_reports_per_projection():
    host = families.complete(5, d=3)
    report = dense_hyper(host, dense_params(host), method=DenseMethod.MC, samples=5000, seed=2)
    assert isinstance(report, DenseHyperMCReport)
    assert [entry.projection for entry in report.projections] == [(v,) for v in range(5)]
    assert all(len(entry.vertices) == 4 for entry in report.projections)
    assert report.ok


@pytest.mark.parametrize(
    "host, m",
    [
        (Hypergraph.of(4, [(0, 1), (0, 2), (1, 2)]), 4),
        (families.complete(4), 1),
        (families.cycle(5), 3),
    ],
)
def test_lift_of_a_graph_is_dense_exact(host, m):
    params = DenseParams(p=HALF, m=m)
    lifted = dense_hyper(host, params, keep_degenerate=True)
    direct = dense_exact(host, params, keep_degenerate=True)
    assert lifted == direct
    assert lifted_closed_form_loads(host, params) == (params.target_load,) * host.n


def test_lift_of_a_graph_keeps_isolated_vertices_in_monte_carlo():
    host = Hypergraph.of(4, [(0, 1), (0, 2), (1, 2)])
    report = dense_hyper(host, DenseParams(p=HALF, m=4), method=DenseMethod.MC, samples=2000, seed=1)
    assert [(entry.projection, entry.vertices) for entry in report.projections] == [((), (0, 1, 2, 3))]


def test_lift_names_the_offending_set():
    host = Hypergraph.of(5, [(0, 1, 2), (0, 1, 3), (0, 2, 3)], d=3)
    with pytest.raises(PreconditionError, match=r"\(d-1\)-set"):
        dense_hyper(host, DenseParams(p=HALF, m=0))


@pytest.mark.parametrize("p", [HALF, THIRD])
@pytest.mark.parametrize("host", small_graphs(), ids=lambda g: f"n{g.n}m{len(g.edges)}")
def test_named_suite_exact_closed_forms(host, p):
    params = dense_params(host, p=p)
    result = dense_exact(host, params, keep_degenerate=True)
    assert all(total == 1 for total in validate_cover(result.cover).totals.values())
    assert dense_load_profile(result).loads == (params.target_load,) * host.n
    assert result.total_weight == 1 / (2 * p * (1 - p) ** params.m)


def test_monte_carlo_on_k5():
    params = DenseParams(p=Fraction(1, 4), m=1)
    report = dense_mc(families.complete(5), params, samples=100_000, seed=2024)
    assert report.edge_expected == pytest.approx(3 / 8)
    assert report.vertex_expected == pytest.approx(1.0)
    assert report.ok
