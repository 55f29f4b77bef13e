"""Random d-uniform hypergraphs and the density lower bound for fractional CM-covers.

If no cuph subhypergraph of H is denser than -log n / log p, then for every
fractional CM-cover |E| <= sum w_i|E_i| <= (-log n / log p) sum_v l_v, so the
max load is at least -(log p / log n) * |E|/n. Both logarithmic ratios are
rounded down, which keeps the checked inequalities sound.
"""
import logging
import math
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

import numpy as np

from cuphcover.core.errors import PreconditionError, ValidationFailure
from cuphcover.core.parallel import ordered_map
from cuphcover.core.rational import dyadic, log_ratio_floor
from cuphcover.schemas.bounds import (
    BoundReport,
    ChainTerms,
    DensitySurvey,
    FirstMomentReport,
    RandomModel,
)
from cuphcover.schemas.cover import WeightedCover
from cuphcover.schemas.enums import Family, Mode, Relax
from cuphcover.schemas.hypergraph import Hypergraph
from cuphcover.services.catalog import max_cuph_density
from cuphcover.services.coverage import density, load_profile
from cuphcover.services.oracle import opt_load

logger = logging.getLogger(__name__)


def gen_random(model: RandomModel) -> Hypergraph:
    """One uniform variate per d-subset, in lexicographic order."""
    if model.n < model.d:
        raise PreconditionError(f"n={model.n} must be at least d={model.d}")
    candidates = list(combinations(range(model.n), model.d))
    draws = np.random.default_rng(model.seed).random(len(candidates))
    edges = [edge for edge, u in zip(candidates, draws) if Fraction(float(u)) < model.p]
    logger.debug("gen_random n=%d d=%d p=%s seed=%d: %d edges", model.n, model.d, model.p, model.seed, len(edges))
    return Hypergraph.of(model.n, edges, d=model.d)


def edge_count_zscore(host: Hypergraph, p: Fraction) -> float:
    """Standardized deviation of |E| from its binomial mean p*C(n,d)."""
    trials = comb(host.n, host.d)
    variance = trials * float(p) * (1 - float(p))
    if variance == 0:
        return 0.0
    return (len(host.edges) - trials * float(p)) / math.sqrt(variance)


def density_threshold(n: int, p: Fraction) -> Fraction:
    if not 0 < p < 1:
        raise PreconditionError(f"p={p} out of range (0,1)")
    if n < 2:
        raise PreconditionError(f"n={n} must be at least 2")
    return log_ratio_floor(Fraction(n), 1 / Fraction(p))


def density_lower_bound(
    host: Hypergraph,
    p: Fraction,
    with_lp: bool = False,
    limit: int | None = None,
    threads: int = 1,
) -> BoundReport:
    p = Fraction(p)
    threshold = density_threshold(host.n, p)
    rho = density(host)
    densest, witness = max_cuph_density(host, limit, threads)
    holds = densest <= threshold
    bound = rho * log_ratio_floor(1 / p, Fraction(host.n)) if holds else None

    lp_value = None
    if with_lp:
        lp_value = opt_load(host, Family.CM, Mode.COVER, Relax.FRACTIONAL, limit=limit, threads=threads).value
        if bound is not None and lp_value is not None and lp_value < bound:
            raise ValidationFailure(f"fractional CM-cover optimum {lp_value} is below the density bound {bound}")

    logger.info(
        "density_lower_bound n=%d |E|=%d: max cuph density %s vs threshold %.6f, bound %s",
        host.n, len(host.edges), densest, float(threshold), bound,
    )
    return BoundReport(
        n=host.n,
        edges=len(host.edges),
        p=p,
        density=rho,
        threshold=threshold,
        max_cuph_density=densest,
        witness=witness,
        condition_holds=holds,
        lower_bound=bound,
        lp_value=lp_value,
    )


def smallest_relevant_size(n: int, p: Fraction, d: int = 2) -> int:
    """Least s at which a d-uniform hypergraph on s vertices can exceed the density threshold."""
    threshold = density_threshold(n, p)
    s = d
    while Fraction(comb(s - 1, d - 1), d) <= threshold:
        s += 1
    return s


def first_moment_bound(
    n: int,
    p: Fraction,
    s_min: int | None = None,
    s_max: int = 20,
    k_max: int = 20,
    d: int = 2,
) -> FirstMomentReport:
    """Truncated first-moment sum over s_min <= s <= s_max, 0 <= k <= k_max, and its comparison sum."""
    if n < 1:
        raise PreconditionError(f"n={n} must be at least 1")
    s_min = smallest_relevant_size(n, p, d) if s_min is None else s_min
    if s_min < 0:
        raise PreconditionError(f"s_min={s_min} must be nonnegative")

    left, right, term_by_term = Fraction(0), Fraction(0), True
    for s in range(s_min, s_max + 1):
        subsets = Fraction(comb(n, s), n**s)
        for k in range(k_max + 1):
            splits = Fraction(s**k, factorial(k))
            lhs, rhs = subsets * splits, splits / factorial(s)
            term_by_term = term_by_term and lhs <= rhs
            left += lhs
            right += rhs
    return FirstMomentReport(
        n=n, s_min=s_min, s_max=s_max, k_max=k_max, left=left, right=right, term_by_term=term_by_term
    )


def inverse_e_rational() -> Fraction:
    return dyadic(1 / math.e)


def entropy_rate(p: Fraction | float) -> float:
    """-p log2 p; largest at p = 1/e."""
    p = float(p)
    return -p * math.log2(p)


def chain_terms(cover: WeightedCover) -> ChainTerms:
    return ChainTerms(
        edges=len(cover.host.edges),
        edge_incidences=sum((item.weight * item.cuph.edge_count for item in cover.items), Fraction(0)),
        vertex_incidences=sum((item.weight * len(item.cuph.vertices) for item in cover.items), Fraction(0)),
        load_sum=sum(load_profile(cover).loads, Fraction(0)),
    )


def survey_density(
    n: int,
    p: Fraction,
    seeds: range | list[int],
    d: int = 2,
    limit: int | None = None,
    threads: int = 1,
) -> DensitySurvey:
    """How many seeded H^d(n,p) have a cuph denser than the threshold."""
    threshold = density_threshold(n, p)

    def exceeds(seed: int) -> bool:
        host = gen_random(RandomModel(n=n, d=d, p=p, seed=seed))
        return max_cuph_density(host, limit)[0] > threshold

    flags = ordered_map(exceeds, list(seeds), threads)
    survey = DensitySurvey(
        n=n, d=d, p=Fraction(p), threshold=threshold, instances=len(flags), exceeding=sum(flags)
    )
    logger.info("survey_density n=%d: %d of %d above threshold", n, survey.exceeding, survey.instances)
    return survey
