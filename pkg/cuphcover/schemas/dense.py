from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from cuphcover.schemas.cover import WeightedCover
from cuphcover.schemas.hypergraph import Edge


class DenseParams(BaseModel):
    """Sampling rate p and degree slack m (every degree is at least n - m)."""

    p: Fraction
    m: int = Field(..., ge=0)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def p_in_open_unit_interval(self) -> "DenseParams":
        if not 0 < self.p < 1:
            raise ValueError(f"p={self.p} must lie strictly between 0 and 1")
        return self

    @field_serializer("p")
    def dump_p(self, p: Fraction) -> str:
        return f"{p.numerator}/{p.denominator}"

    @property
    def normalization(self) -> Fraction:
        """2p(1-p)^m, the probability that a fixed edge is covered."""
        return 2 * self.p * (1 - self.p) ** self.m

    @property
    def target_load(self) -> Fraction:
        return (1 / self.p + (1 - self.p) ** -self.m) / 2

    @property
    def total_weight(self) -> Fraction:
        return 1 / self.normalization

    @property
    def membership_probability(self) -> Fraction:
        return self.p + (1 - self.p) ** self.m


class DenseOutcome(BaseModel):
    """One sampled (A, B); either side may be empty."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    model_config = ConfigDict(frozen=True)


class DegenerateMass(BaseModel):
    """Normalized weight of outcomes with an empty side, keyed by their vertices."""

    vertices: tuple[int, ...]
    weight: Fraction

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_serializer("weight")
    def dump_weight(self, weight: Fraction) -> str:
        return f"{weight.numerator}/{weight.denominator}"


class DenseExactResult(BaseModel):
    params: DenseParams
    cover: WeightedCover
    degenerate: tuple[DegenerateMass, ...] = ()
    keep_degenerate: bool = False

    model_config = ConfigDict(frozen=True)

    @property
    def degenerate_weight(self) -> Fraction:
        return sum((mass.weight for mass in self.degenerate), Fraction(0))

    @property
    def total_weight(self) -> Fraction:
        total = self.cover.total_weight
        return total + self.degenerate_weight if self.keep_degenerate else total


class DenseMCReport(BaseModel):
    samples: int
    seed: int
    z_threshold: float
    edge_expected: float
    edge_stderr: float
    edge_frequency: dict[Edge, float]
    vertex_expected: float
    vertex_stderr: float
    vertex_frequency: tuple[float, ...]
    flagged_edges: tuple[Edge, ...] = ()
    flagged_vertices: tuple[int, ...] = ()

    model_config = ConfigDict(frozen=True)

    @field_serializer("edge_frequency")
    def dump_edges(self, frequency: dict[Edge, float]) -> dict[str, float]:
        return {" ".join(map(str, e)): f for e, f in frequency.items()}

    @property
    def ok(self) -> bool:
        return not self.flagged_edges and not self.flagged_vertices


class ProjectionMCReport(BaseModel):
    projection: tuple[int, ...]
    vertices: tuple[int, ...] = Field(..., description="Host index of each local vertex.")
    report: DenseMCReport

    model_config = ConfigDict(frozen=True)


class DenseHyperMCReport(BaseModel):
    projections: tuple[ProjectionMCReport, ...]

    model_config = ConfigDict(frozen=True)

    @property
    def ok(self) -> bool:
        return all(entry.report.ok for entry in self.projections)
