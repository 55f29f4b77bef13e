import json
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from cuphcover.core.rational import render

SIGMA_SOURCE = "Stinson decomposition: sigma(H) <= max load of any fractional cover by ideal cuphs"


class RunSummary(BaseModel):
    """What a subcommand prints: instance stats, parameters, and results."""

    command: str
    n: int
    d: int
    edges: int
    parameters: dict[str, str] = Field(default_factory=dict)
    items: int | None = None
    total_weight: Fraction | None = None
    max_load: Fraction | None = None
    is_cover: bool | None = None
    is_partition: bool | None = None
    rate_ratio: float | None = Field(None, description="max_load over the asymptotic target rate.")
    sigma_upper_bound: Fraction | None = None
    sigma_lower_bound: Fraction | None = None
    sigma_construction: str | None = None
    details: dict[str, str] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_serializer("total_weight", "max_load", "sigma_upper_bound", "sigma_lower_bound")
    def dump_fraction(self, value: Fraction | None) -> str | None:
        return None if value is None else f"{value.numerator}/{value.denominator}"

    def lines(self) -> list[tuple[str, str]]:
        rows = [
            ("command", self.command),
            ("n", str(self.n)),
            ("d", str(self.d)),
            ("edges", str(self.edges)),
        ]
        rows += list(self.parameters.items())
        if self.items is not None:
            rows.append(("items", str(self.items)))
        for key in ("total_weight", "max_load"):
            value = getattr(self, key)
            if value is not None:
                rows.append((key, render(value)))
        for key in ("is_cover", "is_partition"):
            value = getattr(self, key)
            if value is not None:
                rows.append((key, str(value).lower()))
        if self.rate_ratio is not None:
            rows.append(("rate_ratio", f"{self.rate_ratio:.6f}"))
        if self.sigma_construction is not None:
            rows.append(("sigma_upper_bound", render(self.sigma_upper_bound)))
            rows.append(("sigma_construction", self.sigma_construction))
            rows.append(("sigma_bound_source", SIGMA_SOURCE))
        if self.sigma_lower_bound is not None:
            rows.append(("sigma_lower_bound", render(self.sigma_lower_bound)))
        rows += list(self.details.items())
        return rows

    def render_text(self) -> str:
        return "\n".join(f"{key}: {value}" for key, value in self.lines())

    def render_json(self) -> str:
        return json.dumps(self.model_dump(mode="json", exclude_none=True), indent=2, sort_keys=False)
