from functools import cached_property
from itertools import combinations
from math import prod
from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

Edge = tuple[int, ...]


def mask_vertices(mask: int) -> tuple[int, ...]:
    """Vertices of a bitmask, ascending."""
    return tuple(v for v in range(mask.bit_length()) if mask >> v & 1)


class Hypergraph(BaseModel):
    """A d-uniform hypergraph on the vertices 0..n-1 (d=2 is a graph)."""

    n: int = Field(..., ge=0, description="Vertex count; vertices are 0..n-1.")
    d: int = Field(2, ge=2, description="Uniformity: every edge has exactly d vertices.")
    edges: tuple[Edge, ...] = Field(default=(), description="Sorted d-tuples, sorted.")

    model_config = ConfigDict(frozen=True)

    @field_validator("edges")
    @classmethod
    def canonical_edges(cls, edges: tuple[Edge, ...], info: ValidationInfo) -> tuple[Edge, ...]:
        n, d = info.data.get("n"), info.data.get("d")
        if n is None or d is None:
            return edges
        canonical = []
        for edge in edges:
            edge = tuple(sorted(edge))
            if len(edge) != d or len(set(edge)) != d:
                raise ValueError(f"edge {edge} does not have {d} distinct vertices")
            if edge[0] < 0 or edge[-1] >= n:
                raise ValueError(f"edge {edge} has a vertex outside 0..{n - 1}")
            canonical.append(edge)
        canonical.sort()
        for left, right in zip(canonical, canonical[1:]):
            if left == right:
                raise ValueError(f"duplicate edge {left}")
        return tuple(canonical)

    @classmethod
    def of(cls, n: int, edges: Iterable[Iterable[int]], d: int = 2) -> "Hypergraph":
        return cls(n=n, d=d, edges=tuple(tuple(e) for e in edges))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for edge in self.edges:
            for v in edge:
                counts[v] += 1
        return tuple(counts)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks (graphs only)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def min_degree(self) -> int:
        return min(self.degrees, default=0)


class Cuph(BaseModel):
    """A complete d-uniform k-partite hypergraph given by its partite sets."""

    d: int = Field(2, ge=2, description="Uniformity.")
    parts: tuple[tuple[int, ...], ...] = Field(..., description="Sorted parts, sorted.")

    model_config = ConfigDict(frozen=True)

    @field_validator("parts")
    @classmethod
    def canonical_parts(cls, parts: tuple[tuple[int, ...], ...], info: ValidationInfo):
        d = info.data.get("d", 2)
        if len(parts) < d:
            raise ValueError(f"a cuph needs at least d={d} parts, got {len(parts)}")
        seen: set[int] = set()
        canonical = []
        for part in parts:
            if not part:
                raise ValueError("partite sets must be nonempty")
            part = tuple(sorted(part))
            if seen.intersection(part) or len(set(part)) != len(part):
                raise ValueError(f"partite sets overlap at {sorted(seen.intersection(part))}")
            seen.update(part)
            canonical.append(part)
        return tuple(sorted(canonical))

    @classmethod
    def of(cls, *parts: Iterable[int], d: int = 2) -> "Cuph":
        return cls(d=d, parts=tuple(tuple(p) for p in parts))

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for part in self.parts for v in part)

    @property
    def edge_count(self) -> int:
        """Elementary symmetric polynomial of degree d in the part sizes."""
        sizes = [len(part) for part in self.parts]
        return sum(prod(chosen) for chosen in combinations(sizes, self.d))

    def __contains__(self, v: int) -> bool:
        return any(v in part for part in self.parts)
