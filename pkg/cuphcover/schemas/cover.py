from fractions import Fraction
from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from cuphcover.schemas.enums import Family, Mode
from cuphcover.schemas.hypergraph import Cuph, Edge, Hypergraph


class CoverItem(BaseModel):
    cuph: Cuph
    weight: Fraction = Field(Fraction(1), description="Positive exact weight.")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode="after")
    def positive_weight(self) -> "CoverItem":
        if self.weight <= 0:
            raise ValueError(f"weight {self.weight} is not positive")
        return self

    @field_serializer("weight")
    def dump_weight(self, weight: Fraction) -> str:
        return f"{weight.numerator}/{weight.denominator}"


class WeightedCover(BaseModel):
    """Weighted cuphs attached to a host; integral covers carry weight 1."""

    host: Hypergraph
    items: tuple[CoverItem, ...] = ()
    mode: Mode = Mode.PARTITION
    family: Family = Family.CB

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def consistent_items(self) -> "WeightedCover":
        for index, item in enumerate(self.items):
            if item.cuph.d != self.host.d:
                raise ValueError(f"item {index} has uniformity {item.cuph.d}, host has {self.host.d}")
            outside = sorted(v for v in item.cuph.vertices if not 0 <= v < self.host.n)
            if outside:
                raise ValueError(f"item {index} uses vertices {outside} outside 0..{self.host.n - 1}")
            if self.family is Family.CB and item.cuph.k != self.host.d:
                raise ValueError(f"item {index} has {item.cuph.k} parts; CB items need exactly {self.host.d}")
        return self

    @classmethod
    def build(
        cls,
        host: Hypergraph,
        items: Iterable[tuple[Cuph, Fraction]],
        mode: Mode = Mode.PARTITION,
        family: Family = Family.CB,
    ) -> "WeightedCover":
        return cls(
            host=host,
            items=tuple(CoverItem(cuph=c, weight=Fraction(w)) for c, w in items),
            mode=mode,
            family=family,
        )

    @property
    def is_integral(self) -> bool:
        return all(item.weight == 1 for item in self.items)

    @property
    def total_weight(self) -> Fraction:
        return sum((item.weight for item in self.items), Fraction(0))

    def merged(self) -> "WeightedCover":
        """Combine identical canonical cuphs, adding weights; first-seen order."""
        weights: dict[Cuph, Fraction] = {}
        for item in self.items:
            weights[item.cuph] = weights.get(item.cuph, Fraction(0)) + item.weight
        return WeightedCover.build(self.host, weights.items(), self.mode, self.family)


class CoverageReport(BaseModel):
    totals: dict[Edge, Fraction]
    min_coverage: Fraction | None = None
    max_coverage: Fraction | None = None
    under_covered: tuple[Edge, ...] = ()
    over_covered: tuple[Edge, ...] = ()
    foreign_items: tuple[int, ...] = Field(
        default=(), description="Indices of items that are not subhypergraphs of the host."
    )
    is_cover: bool
    is_partition: bool

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_serializer("totals")
    def dump_totals(self, totals: dict[Edge, Fraction]) -> dict[str, str]:
        return {" ".join(map(str, e)): f"{w.numerator}/{w.denominator}" for e, w in totals.items()}

    @field_serializer("min_coverage", "max_coverage")
    def dump_bound(self, value: Fraction | None) -> str | None:
        return None if value is None else f"{value.numerator}/{value.denominator}"

    def violations(self, mode: Mode) -> tuple[Edge, ...]:
        if mode is Mode.COVER:
            return self.under_covered
        return tuple(sorted(self.under_covered + self.over_covered))


class LoadProfile(BaseModel):
    loads: tuple[Fraction, ...]
    max_load: Fraction

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_serializer("loads")
    def dump_loads(self, loads: tuple[Fraction, ...]) -> list[str]:
        return [f"{w.numerator}/{w.denominator}" for w in loads]

    @field_serializer("max_load")
    def dump_max(self, value: Fraction) -> str:
        return f"{value.numerator}/{value.denominator}"
