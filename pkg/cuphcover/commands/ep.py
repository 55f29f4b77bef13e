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
from cuphcover.schemas.construction import Orientation
from cuphcover.schemas.enums import Relax
from cuphcover.services.ep import (
    default_k,
    ep_fractional,
    ep_partition,
    fractional_load_bound,
    partition_count_bound,
    partition_load_bound,
)


@click.command("ep")
@host_options
@click.option("--k", "k", type=AUTO_INT, default="auto", help="Class size; auto is ceil(log n - 2 log log n).")
@relax_option(Relax.INTEGRAL)
@click.option("--seed", type=int, default=None, help="Orient edges at random with this seed.")
@output_options
def command(input_path, graph_name, k, relax, seed, output_path, threads, as_json):
    """Biclique partition of a graph with load at most 2^(k-1) + ceil(n/k)."""
    integral_only_seed(seed, relax, "orients edges at random")
    host = load_host(input_path, graph_name)
    k = default_k(host.n) if k is None else k
    parameters = {"k": str(k), "relax": relax.value}

    if relax is Relax.INTEGRAL:
        orientation = Orientation.random(host, seed) if seed is not None else None
        if seed is not None:
            parameters["seed"] = str(seed)
        cover = ep_partition(host, k, orientation=orientation, threads=threads)
        details = {
            "count_bound": render(partition_count_bound(host.n, k)),
            "load_bound": render(partition_load_bound(host.n, k)),
        }
    else:
        cover = ep_fractional(host, k, threads=threads)
        details = {"load_bound": render(fractional_load_bound(host.n, k))}

    summary = cover_summary("ep", cover, parameters, details=details)
    save_cover(cover, output_path)
    emit(summary, as_json)
    require_valid(summary, partition=True)
