import math

import click

from cuphcover.commands.options import AUTO_INT, AUTO_RATIONAL, host_options, load_host, output_options
from cuphcover.commands.report import cover_summary, emit, require_valid, save_cover
from cuphcover.core.errors import ValidationFailure
from cuphcover.core.rational import render
from cuphcover.schemas.dense import DenseExactResult, DenseMCReport, DenseParams
from cuphcover.schemas.enums import DenseMethod
from cuphcover.schemas.hypergraph import Hypergraph
from cuphcover.schemas.summary import RunSummary
from cuphcover.services.dense import (
    dense_hyper,
    dense_load_profile,
    dense_mc,
    dense_params,
)
from cuphcover.services.coverage import load_profile


def dense_rate(params: DenseParams) -> float | None:
    """m/log m for graphs of minimum degree n - m."""
    return params.m / math.log2(params.m) if params.m >= 2 else None


def _exact_summary(result: DenseExactResult, parameters: dict[str, str]) -> RunSummary:
    params = result.params
    details = {
        "target_load": render(params.target_load),
        "closed_form_total_weight": render(params.total_weight),
        "degenerate_weight": render(result.degenerate_weight),
        "total_weight_with_degenerate": render(result.cover.total_weight + result.degenerate_weight),
    }
    if result.keep_degenerate:
        details["max_load_with_degenerate"] = render(dense_load_profile(result).max_load)
    return cover_summary(
        "dense",
        result.cover,
        parameters,
        rate=dense_rate(params) if result.cover.host.d == 2 else None,
        profile=load_profile(result.cover),
        details=details,
    )


def _mc_details(report: DenseMCReport, prefix: str = "") -> dict[str, str]:
    return {
        f"{prefix}edge_expected": f"{report.edge_expected:.6f}",
        f"{prefix}edge_stderr": f"{report.edge_stderr:.6f}",
        f"{prefix}vertex_expected": f"{report.vertex_expected:.6f}",
        f"{prefix}vertex_stderr": f"{report.vertex_stderr:.6f}",
        f"{prefix}flagged_edges": str(len(report.flagged_edges)),
        f"{prefix}flagged_vertices": str(len(report.flagged_vertices)),
    }


def _mc_summary(host: Hypergraph, parameters: dict[str, str], details: dict[str, str]) -> RunSummary:
    return RunSummary(
        command="dense", n=host.n, d=host.d, edges=len(host.edges), parameters=parameters, details=details
    )


@click.command("dense")
@host_options
@click.option("--p", "p", type=AUTO_RATIONAL, default="auto", help="Sampling rate; auto is the load-minimizing choice.")
@click.option("--m", "m", type=AUTO_INT, default="auto", help="Degree slack; auto is the smallest admissible value.")
@click.option("--method", type=click.Choice([m.value for m in DenseMethod]), default=DenseMethod.EXACT.value)
@click.option("--keep-degenerate", is_flag=True, help="Count outcomes with an empty side in loads and weight.")
@click.option("--samples", type=click.IntRange(min=0), default=100_000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--limit", type=int, default=None, help="Vertex limit for exact enumeration.")
@output_options
def command(
    input_path, graph_name, p, m, method, keep_degenerate, samples, seed, limit, output_path, threads, as_json
):
    """Randomized fractional biclique partition for graphs of minimum degree n - m."""
    host = load_host(input_path, graph_name)
    params = dense_params(host, p, m)
    method = DenseMethod(method)
    parameters = {"p": render(params.p), "m": str(params.m), "method": method.value}

    if method is DenseMethod.EXACT:
        result = dense_hyper(host, params, keep_degenerate=keep_degenerate, limit=limit, threads=threads)
        parameters["keep_degenerate"] = str(keep_degenerate).lower()
        summary = _exact_summary(result, parameters)
        save_cover(result.cover, output_path)
        emit(summary, as_json)
        require_valid(summary, partition=True)
        return

    parameters.update(samples=str(samples), seed=str(seed))
    if host.d == 2:
        report = dense_mc(host, params, samples, seed, threads=threads)
        ok, details = report.ok, _mc_details(report)
    else:
        hyper = dense_hyper(host, params, DenseMethod.MC, samples=samples, seed=seed, threads=threads)
        ok, details = hyper.ok, {}
        for entry in hyper.projections:
            details.update(_mc_details(entry.report, prefix=f"A={','.join(map(str, entry.projection))} "))
    emit(_mc_summary(host, parameters, details), as_json)
    if not ok:
        raise ValidationFailure("dense: empirical frequencies deviate from the closed forms")

