import click

from cuphcover.commands.options import family_option, host_options, load_host, mode_option, output_options, relax_option
from cuphcover.commands.report import emit, save_cover
from cuphcover.schemas.enums import Family, Mode, Relax
from cuphcover.schemas.summary import RunSummary
from cuphcover.services.coverage import load_profile, validate_cover
from cuphcover.services.oracle import opt_load


@click.command("oracle")
@host_options
@family_option(Family.CB)
@mode_option(Mode.PARTITION)
@relax_option(Relax.FRACTIONAL)
@click.option("--limit", type=int, default=None, help="Vertex limit for the catalog.")
@click.option("--node-limit", type=int, default=None, help="Branch-and-bound node limit.")
@output_options
def command(input_path, graph_name, family, mode, relax, limit, node_limit, output_path, threads, as_json):
    """Exact min-max-load cover or partition over every cuph of the host."""
    host = load_host(input_path, graph_name)
    result = opt_load(host, family, mode, relax, limit=limit, node_limit=node_limit, threads=threads)
    details = {
        "value": "inf" if result.value is None else f"{result.value.numerator}/{result.value.denominator}",
        "columns": str(result.columns),
        "pivots": str(result.pivots),
    }
    if relax is Relax.INTEGRAL:
        details["nodes"] = str(result.nodes)

    certificate = result.certificate
    report = validate_cover(certificate) if certificate is not None else None
    summary = RunSummary(
        command="oracle",
        n=host.n,
        d=host.d,
        edges=len(host.edges),
        parameters={"family": family.value, "mode": mode.value, "relax": relax.value},
        items=len(certificate.items) if certificate is not None else None,
        total_weight=certificate.total_weight if certificate is not None else None,
        max_load=load_profile(certificate).max_load if certificate is not None else None,
        is_cover=report.is_cover if report else None,
        is_partition=report.is_partition if report else None,
        details=details,
    )
    save_cover(certificate, output_path)
    emit(summary, as_json)
