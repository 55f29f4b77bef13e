from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from cuphcover.schemas.cover import WeightedCover
from cuphcover.schemas.enums import Family, Mode, Relax
from cuphcover.schemas.hypergraph import Cuph, Edge, Hypergraph


class SubgraphCatalog(BaseModel):
    """Every CB or CM subhypergraph of `host` with at least one edge, canonical and deduplicated."""

    host: Hypergraph
    family: Family
    cuphs: tuple[Cuph, ...]
    edge_incidence: dict[Edge, tuple[int, ...]] = Field(..., description="Edge -> indices of cuphs containing it.")
    vertex_incidence: tuple[tuple[int, ...], ...] = Field(..., description="Vertex -> indices of cuphs containing it.")

    model_config = ConfigDict(frozen=True)


class Sense(str, Enum):
    LE = "<="
    GE = ">="
    EQ = "="


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class LPSolution(BaseModel):
    status: LPStatus
    x: tuple[Fraction, ...] = ()
    objective: Fraction | None = None
    pivots: int = 0

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class OracleResult(BaseModel):
    """Optimal max load (None means no cover/partition exists) and a certificate attaining it."""

    value: Fraction | None
    certificate: WeightedCover | None
    mode: Mode
    family: Family
    relax: Relax
    columns: int = 0
    pivots: int = 0
    nodes: int = 0

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_serializer("value")
    def dump_value(self, value: Fraction | None) -> str | None:
        return None if value is None else f"{value.numerator}/{value.denominator}"
