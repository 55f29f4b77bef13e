from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from cuphcover.schemas.hypergraph import Cuph


def _dump(value: Fraction | None) -> str | None:
    return None if value is None else f"{value.numerator}/{value.denominator}"


class RandomModel(BaseModel):
    """H^d(n,p): every d-subset is an edge independently with probability p."""

    n: int = Field(..., ge=0)
    d: int = Field(2, ge=2)
    p: Fraction
    seed: int = 0

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def p_is_probability(self) -> "RandomModel":
        if not 0 <= self.p <= 1:
            raise ValueError(f"p={self.p} out of range [0,1]")
        return self

    @field_serializer("p")
    def dump_p(self, p: Fraction) -> str:
        return _dump(p)


class BoundReport(BaseModel):
    """The density lower bound on the max load of every fractional CM-cover."""

    n: int
    edges: int
    p: Fraction
    density: Fraction
    threshold: Fraction = Field(..., description="-log n / log p, rounded down.")
    max_cuph_density: Fraction
    witness: Cuph | None = None
    condition_holds: bool
    lower_bound: Fraction | None = Field(None, description="-(log p / log n) * density, rounded down.")
    lp_value: Fraction | None = None

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def bound_only_under_condition(self) -> "BoundReport":
        if self.lower_bound is not None and not self.condition_holds:
            raise ValueError("a lower bound is only implied when the density condition holds")
        return self

    @field_serializer("p", "density", "threshold", "max_cuph_density", "lower_bound", "lp_value")
    def dump_fraction(self, value: Fraction | None) -> str | None:
        return _dump(value)


class FirstMomentReport(BaseModel):
    n: int
    s_min: int
    s_max: int
    k_max: int
    left: Fraction = Field(..., description="Sum of C(n,s) s^k/k! n^-s.")
    right: Fraction = Field(..., description="Sum of s^k/(s! k!).")
    term_by_term: bool

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_serializer("left", "right")
    def dump_fraction(self, value: Fraction) -> str:
        return _dump(value)


class ChainTerms(BaseModel):
    """|E| <= sum w_i|E_i| and sum w_i|V_i| = sum_v l_v, for a weighted cover."""

    edges: int
    edge_incidences: Fraction
    vertex_incidences: Fraction
    load_sum: Fraction

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_serializer("edge_incidences", "vertex_incidences", "load_sum")
    def dump_fraction(self, value: Fraction) -> str:
        return _dump(value)

    @property
    def covers_edges(self) -> bool:
        return self.edge_incidences >= self.edges

    @property
    def loads_agree(self) -> bool:
        return self.vertex_incidences == self.load_sum


class DensitySurvey(BaseModel):
    n: int
    d: int
    p: Fraction
    threshold: Fraction
    instances: int
    exceeding: int

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_serializer("p", "threshold")
    def dump_fraction(self, value: Fraction) -> str:
        return _dump(value)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.exceeding, self.instances) if self.instances else Fraction(0)
