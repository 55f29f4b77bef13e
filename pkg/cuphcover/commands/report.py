"""Turning construction results into run summaries."""
import math
from fractions import Fraction

import click

from cuphcover.core.errors import ValidationFailure
from cuphcover.io.cover_file import write_cover
from cuphcover.schemas.cover import LoadProfile, WeightedCover
from cuphcover.schemas.hypergraph import Hypergraph
from cuphcover.schemas.summary import RunSummary
from cuphcover.services.coverage import load_profile, validate_cover


def target_rate(host: Hypergraph) -> float | None:
    """n/log n for graphs, n^(d-1)/log n for d-uniform hypergraphs."""
    if host.n < 2:
        return None
    return host.n ** (host.d - 1) / math.log2(host.n)


def rate_ratio(max_load: Fraction, rate: float | None) -> float | None:
    return float(max_load) / rate if rate else None


def cover_summary(
    command: str,
    cover: WeightedCover,
    parameters: dict[str, str],
    rate: float | None = None,
    profile: LoadProfile | None = None,
    details: dict[str, str] | None = None,
) -> RunSummary:
    host = cover.host
    report = validate_cover(cover)
    profile = profile or load_profile(cover)
    return RunSummary(
        command=command,
        n=host.n,
        d=host.d,
        edges=len(host.edges),
        parameters=parameters,
        items=len(cover.items),
        total_weight=cover.total_weight,
        max_load=profile.max_load,
        is_cover=report.is_cover,
        is_partition=report.is_partition,
        rate_ratio=rate_ratio(profile.max_load, rate if rate is not None else target_rate(host)),
        details=details or {},
    )


def emit(summary: RunSummary, as_json: bool) -> None:
    click.echo(summary.render_json() if as_json else summary.render_text())


def save_cover(cover: WeightedCover | None, output_path: str | None) -> None:
    if output_path and cover is not None:
        write_cover(cover, output_path)


def require_valid(summary: RunSummary, partition: bool) -> None:
    """Exit code 2 when the emitted cover does not validate in the requested mode."""
    ok = summary.is_partition if partition else summary.is_cover
    if ok is False:
        raise ValidationFailure(f"{summary.command}: output is not a valid {'partition' if partition else 'cover'}")
