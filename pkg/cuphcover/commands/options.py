"""Flags shared by several subcommands, and host loading."""
from fractions import Fraction
from typing import Callable

import click

from cuphcover.core.config import settings
from cuphcover.core.errors import PreconditionError
from cuphcover.core.rational import parse_fraction
from cuphcover.io.hypergraph_file import read_hypergraph
from cuphcover.schemas.enums import Family, Mode, Relax
from cuphcover.schemas.hypergraph import Hypergraph
from cuphcover.services.families import named


class AutoInt(click.ParamType):
    """An integer, or `auto` (None) to let the construction choose."""

    name = "INT|auto"

    def convert(self, value, param, ctx) -> int | None:
        if value is None or isinstance(value, int):
            return value
        if value.strip().lower() == "auto":
            return None
        try:
            return int(value)
        except ValueError:
            self.fail(f"'{value}' is neither an integer nor 'auto'", param, ctx)


class AutoRational(click.ParamType):
    name = "RATIONAL|auto"

    def convert(self, value, param, ctx) -> Fraction | None:
        if value is None or isinstance(value, Fraction):
            return value
        if value.strip().lower() == "auto":
            return None
        try:
            return parse_fraction(value, "p")
        except PreconditionError as exc:
            self.fail(str(exc), param, ctx)


AUTO_INT = AutoInt()
AUTO_RATIONAL = AutoRational()


def host_options(fn: Callable) -> Callable:
    fn = click.option("--graph", "graph_name", help="Named family instead of a file: K5, C6, P4, K2,3, K5^3.")(fn)
    return click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False), help=".uhg host file.")(fn)


def output_options(fn: Callable) -> Callable:
    fn = click.option("--json", "as_json", is_flag=True, help="Print the summary as JSON.")(fn)
    fn = click.option(
        "--threads", type=click.IntRange(min=1), default=lambda: int(settings.get("THREADS", 1)), show_default="1"
    )(fn)
    return click.option("--output", "output_path", type=click.Path(dir_okay=False), help="Write the result here.")(fn)


def mode_option(default: Mode) -> Callable:
    return click.option(
        "--mode", type=click.Choice([m.value for m in Mode]), default=default.value, callback=lambda c, p, v: Mode(v)
    )


def family_option(default: Family | None) -> Callable:
    return click.option(
        "--family",
        type=click.Choice([f.value for f in Family]),
        default=default.value if default else None,
        callback=lambda c, p, v: Family(v) if v else None,
    )


def relax_option(default: Relax) -> Callable:
    return click.option(
        "--relax", type=click.Choice([r.value for r in Relax]), default=default.value, callback=lambda c, p, v: Relax(v)
    )


def load_host(input_path: str | None, graph_name: str | None) -> Hypergraph:
    if (input_path is None) == (graph_name is None):
        raise click.UsageError("give exactly one of --input and --graph")
    return read_hypergraph(input_path) if input_path else named(graph_name)


def integral_only_seed(seed: int | None, relax: Relax, what: str) -> None:
    if seed is not None and relax is not Relax.INTEGRAL:
        raise click.UsageError(f"--seed {what} and only applies to --relax integral")
