import click

from cuphcover.commands.options import output_options
from cuphcover.commands.report import emit
from cuphcover.core.rational import parse_fraction, render
from cuphcover.io.hypergraph_file import write_hypergraph
from cuphcover.schemas.bounds import RandomModel
from cuphcover.schemas.enums import Family
from cuphcover.schemas.summary import RunSummary
from cuphcover.services.catalog import family_limit
from cuphcover.services.coverage import density
from cuphcover.services.random_bounds import density_lower_bound, edge_count_zscore, gen_random, survey_density


@click.command("random")
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--d", "d", type=click.IntRange(min=2), default=2, show_default=True)
@click.option("--p", "p", default="1/2", show_default=True, help="Edge probability, a rational in [0,1].")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--oracle", "with_lp", is_flag=True, help="Also solve the fractional CM-cover LP.")
@click.option("--limit", type=int, default=None, help="Vertex limit for the exhaustive analysis.")
@click.option(
    "--survey",
    "survey_seeds",
    type=click.IntRange(min=0),
    default=0,
    show_default=True,
    help="Also count, over seeds 0..SEEDS-1, how often the densest cuph beats the threshold.",
)
@output_options
def command(n, d, p, seed, with_lp, limit, survey_seeds, output_path, threads, as_json):
    """Generate H^d(n,p) and check the density lower bound on it."""
    model = RandomModel(n=n, d=d, p=parse_fraction(p, "p"), seed=seed)
    host = gen_random(model)
    if output_path:
        write_hypergraph(host, output_path)

    details = {"edge_zscore": f"{edge_count_zscore(host, model.p):.6f}"}
    if host.n >= 1:
        details["density"] = render(density(host))

    name, default_limit = family_limit(host, Family.CM)
    effective_limit = default_limit if limit is None else limit
    if not 0 < model.p < 1 or host.n < 2:
        details["analysis"] = "skipped (needs 0 < p < 1 and n >= 2)"
    elif host.n > effective_limit:
        details["analysis"] = f"skipped (n exceeds {name}={effective_limit})"
    else:
        report = density_lower_bound(host, model.p, with_lp=with_lp, limit=limit, threads=threads)
        details.update(
            threshold=render(report.threshold),
            max_cuph_density=render(report.max_cuph_density),
            condition_holds=str(report.condition_holds).lower(),
        )
        if report.lower_bound is not None:
            details["load_lower_bound"] = render(report.lower_bound)
        if with_lp:
            details["lp_value"] = render(report.lp_value)
        if survey_seeds:
            survey = survey_density(host.n, model.p, range(survey_seeds), d=host.d, limit=limit, threads=threads)
            details.update(
                survey_instances=str(survey.instances),
                survey_exceeding=str(survey.exceeding),
                survey_fraction=render(survey.fraction),
            )

    summary = RunSummary(
        command="random",
        n=host.n,
        d=host.d,
        edges=len(host.edges),
        parameters={"p": render(model.p), "seed": str(seed), "survey": str(survey_seeds)},
        details=details,
    )
    emit(summary, as_json)
