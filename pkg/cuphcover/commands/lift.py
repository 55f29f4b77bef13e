import click

from cuphcover.commands.options import (
    AUTO_INT,
    host_options,
    integral_only_seed,
    load_host,
    output_options,
    relax_option,
)
from cuphcover.commands.report import cover_summary, emit, require_valid, save_cover
from cuphcover.core.rational import render
from cuphcover.schemas.construction import EdgeSplit
from cuphcover.schemas.enums import Relax
from cuphcover.services.ep import default_k
from cuphcover.services.lift import (
    hyper_fractional,
    hyper_partition,
    lift_fractional_load_bound,
    lift_partition_load_bound,
)


@click.command("lift")
@host_options
@click.option("--k", "k", type=AUTO_INT, default="auto")
@relax_option(Relax.INTEGRAL)
@click.option("--seed", type=int, default=None, help="Split edges at random with this seed.")
@output_options
def command(input_path, graph_name, k, relax, seed, output_path, threads, as_json):
    """Cuph partition of a d-uniform hypergraph lifted from graph biclique partitions."""
    integral_only_seed(seed, relax, "splits edges at random")
    host = load_host(input_path, graph_name)
    k = default_k(host.n) if k is None else k
    parameters = {"k": str(k), "relax": relax.value}

    if relax is Relax.INTEGRAL:
        split = EdgeSplit.random(host, seed) if seed is not None else None
        if seed is not None:
            parameters["seed"] = str(seed)
        cover = hyper_partition(host, k, split=split, threads=threads)
        bound = lift_partition_load_bound(host.n, host.d, k)
    else:
        cover = hyper_fractional(host, k, threads=threads)
        bound = lift_fractional_load_bound(host.n, host.d, k)

    summary = cover_summary("lift", cover, parameters, details={"load_bound": render(bound)})
    save_cover(cover, output_path)
    emit(summary, as_json)
    require_valid(summary, partition=True)
