from itertools import combinations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from cuphcover.schemas.hypergraph import Edge, Hypergraph


class Orientation(BaseModel):
    """For each graph edge, its tail; the head is the other endpoint."""

    tails: dict[Edge, int]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def tails_on_edges(self) -> "Orientation":
        for edge, tail in self.tails.items():
            if len(edge) != 2 or tail not in edge:
                raise ValueError(f"tail {tail} is not an endpoint of {edge}")
        return self

    @classmethod
    def low_to_high(cls, graph: Hypergraph) -> "Orientation":
        return cls(tails={edge: edge[0] for edge in graph.edges})

    @classmethod
    def random(cls, graph: Hypergraph, seed: int) -> "Orientation":
        flips = np.random.default_rng(seed).random(len(graph.edges)) < 0.5
        return cls(tails={e: e[1] if f else e[0] for e, f in zip(graph.edges, flips)})

    def head(self, edge: Edge) -> int:
        u, v = edge
        return v if self.tails[edge] == u else u


class ClassPartition(BaseModel):
    """Vertex classes H_1..H_ceil(n/k), each of size at most k."""

    n: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    classes: tuple[tuple[int, ...], ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def disjoint_covering(self) -> "ClassPartition":
        flat = sorted(v for cls in self.classes for v in cls)
        if flat != list(range(self.n)):
            raise ValueError(f"classes do not partition 0..{self.n - 1}")
        oversized = [cls for cls in self.classes if not 1 <= len(cls) <= self.k]
        if oversized:
            raise ValueError(f"class {oversized[0]} has size outside 1..{self.k}")
        return self

    @classmethod
    def consecutive(cls, n: int, k: int) -> "ClassPartition":
        return cls(n=n, k=k, classes=tuple(tuple(range(i, min(i + k, n))) for i in range(0, n, k)))


class EdgeSplit(BaseModel):
    """e = A(e) + B(e) with |A(e)| = d-2 and |B(e)| = 2."""

    d: int = Field(..., ge=2)
    a_sets: dict[Edge, tuple[int, ...]]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def proper_split(self) -> "EdgeSplit":
        for edge, a_set in self.a_sets.items():
            if len(a_set) != self.d - 2 or not set(a_set) <= set(edge) or len(edge) != self.d:
                raise ValueError(f"A={a_set} is not a {self.d - 2}-subset of edge {edge}")
        return self

    @classmethod
    def lowest(cls, host: Hypergraph) -> "EdgeSplit":
        return cls(d=host.d, a_sets={edge: edge[: host.d - 2] for edge in host.edges})

    @classmethod
    def random(cls, host: Hypergraph, seed: int) -> "EdgeSplit":
        rng = np.random.default_rng(seed)
        a_sets = {}
        for edge in host.edges:
            chosen = rng.choice(host.d, size=host.d - 2, replace=False)
            a_sets[edge] = tuple(sorted(edge[i] for i in chosen))
        return cls(d=host.d, a_sets=a_sets)

    def b_set(self, edge: Edge) -> Edge:
        a_set = set(self.a_sets[edge])
        return tuple(v for v in edge if v not in a_set)


class ProjectionFamily(BaseModel):
    """E'_A = {e : A subset of e} for every (d-2)-set A with E'_A nonempty."""

    host: Hypergraph
    sets: dict[tuple[int, ...], tuple[Edge, ...]]

    model_config = ConfigDict(frozen=True)

    @classmethod
    def of(cls, host: Hypergraph) -> "ProjectionFamily":
        sets: dict[tuple[int, ...], list[Edge]] = {}
        for edge in host.edges:
            for a_set in combinations(edge, host.d - 2):
                sets.setdefault(a_set, []).append(edge)
        return cls(host=host, sets={a: tuple(es) for a, es in sorted(sets.items())})

    def multiplicity(self, edge: Edge) -> int:
        return sum(edge in edges for edges in self.sets.values())

    def graph(self, a_set: tuple[int, ...]) -> Hypergraph:
        """G'_A on the host's vertex indices."""
        removed = set(a_set)
        pairs = (tuple(v for v in e if v not in removed) for e in self.sets[a_set])
        return Hypergraph.of(self.host.n, pairs)
