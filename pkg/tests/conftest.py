import os

os.environ.setdefault("ENV_FOR_DYNACONF", "testing")

from fractions import Fraction  # noqa: E402
from itertools import combinations  # noqa: E402

import pytest  # noqa: E402
from hypothesis import strategies as st  # noqa: E402

from cuphcover.schemas.bounds import RandomModel  # noqa: E402
from cuphcover.schemas.hypergraph import Hypergraph  # noqa: E402
from cuphcover.services import families  # noqa: E402
from cuphcover.services.random_bounds import gen_random  # noqa: E402


@pytest.fixture
def single_edge() -> Hypergraph:
    return Hypergraph.of(2, [(0, 1)])


@pytest.fixture
def k4() -> Hypergraph:
    return families.complete(4)


@pytest.fixture
def c4() -> Hypergraph:
    return families.cycle(4)


def random_graph(n: int, seed: int, p: Fraction = Fraction(1, 2), d: int = 2) -> Hypergraph:
    return gen_random(RandomModel(n=n, d=d, p=p, seed=seed))


def small_graphs() -> list[Hypergraph]:
    """Named graphs on at most 6 vertices plus a few seeded random ones."""
    named = [families.complete(n) for n in range(2, 7)]
    named += [families.cycle(n) for n in (4, 5, 6)]
    named += [families.path(n) for n in (3, 4, 5)]
    named += [families.complete_bipartite(2, 3)]
    return named + [random_graph(6, seed) for seed in range(3)]


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, d: int = 2) -> Hypergraph:
    """Arbitrary d-uniform hypergraphs on up to max_n vertices."""
    n = draw(st.integers(min_n, max_n))
    candidates = list(combinations(range(n), d))
    chosen = draw(st.lists(st.sampled_from(candidates), unique=True) if candidates else st.just([]))
    return Hypergraph.of(n, chosen, d=d)
