import logging
from fractions import Fraction

import click

from cuphcover.commands.options import host_options, load_host, output_options
from cuphcover.commands.report import emit, save_cover
from cuphcover.core.errors import LimitExceededError, PreconditionError
from cuphcover.core.rational import render
from cuphcover.schemas.cover import WeightedCover
from cuphcover.schemas.enums import Family, Mode, Relax
from cuphcover.schemas.hypergraph import Hypergraph
from cuphcover.schemas.summary import RunSummary
from cuphcover.services.coverage import load_profile, validate_cover
from cuphcover.services.dense import dense_hyper, dense_params
from cuphcover.services.ep import default_k, ep_fractional, ep_partition
from cuphcover.services.lift import hyper_fractional, hyper_partition
from cuphcover.services.oracle import opt_load

logger = logging.getLogger(__name__)


def construction_candidates(
    host: Hypergraph, with_oracle: bool, limit: int | None, threads: int
) -> list[tuple[str, WeightedCover]]:
    """Every applicable construction at default parameters, as valid fractional CB-covers."""
    k = default_k(host.n)
    if host.d == 2:
        found = [
            (f"ep integral (k={k})", ep_partition(host, k, threads=threads)),
            (f"ep fractional (k={k})", ep_fractional(host, k, threads=threads)),
        ]
    else:
        found = [
            (f"lift integral (k={k})", hyper_partition(host, k, threads=threads)),
            (f"lift fractional (k={k})", hyper_fractional(host, k, threads=threads)),
        ]

    try:
        params = dense_params(host)
        dense = dense_hyper(host, params, threads=threads)
        found.append((f"dense exact (p={params.p}, m={params.m})", dense.cover))
    except (LimitExceededError, PreconditionError) as exc:
        logger.info("dense construction skipped: %s", exc)

    if with_oracle:
        result = opt_load(host, Family.CB, Mode.COVER, Relax.FRACTIONAL, limit=limit, threads=threads)
        if result.certificate is not None:
            found.append(("oracle fractional CB cover", result.certificate))
    return [(label, cover) for label, cover in found if validate_cover(cover).is_cover]


@click.command("bound")
@host_options
@click.option("--oracle", "with_oracle", is_flag=True, help="Include the exact fractional CB-cover optimum.")
@click.option("--limit", type=int, default=None, help="Vertex limit for the oracle catalog.")
@output_options
def command(input_path, graph_name, with_oracle, limit, output_path, threads, as_json):
    """Upper bound on the secret-sharing complexity from the lightest construction."""
    host = load_host(input_path, graph_name)
    details: dict[str, str] = {}
    best_label, best = "empty host", Fraction(0)
    best_cover = WeightedCover(host=host)

    if host.edges:
        candidates = construction_candidates(host, with_oracle, limit, threads)
        loads = [(label, load_profile(cover).max_load, cover) for label, cover in candidates]
        for label, load, _ in loads:
            details[f"candidate {label}"] = render(load)
        best_label, best, best_cover = min(loads, key=lambda entry: entry[1])

    summary = RunSummary(
        command="bound",
        n=host.n,
        d=host.d,
        edges=len(host.edges),
        parameters={"oracle": str(with_oracle).lower()},
        max_load=best,
        sigma_upper_bound=best,
        sigma_lower_bound=Fraction(1) if host.edges else None,
        sigma_construction=best_label,
        details=details,
    )
    save_cover(best_cover, output_path)
    emit(summary, as_json)
