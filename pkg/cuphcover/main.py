import sys
from typing import Sequence

import click
from pydantic import ValidationError

from cuphcover.commands import bound, dense, ep, lift, oracle, random, verify
from cuphcover.core.errors import CuphCoverError
from cuphcover.core.logging import configure_logging


# --------------------------
# CLI group
# --------------------------
@click.group()
@click.option("--verbose", is_flag=True, help="Log at DEBUG level on stderr.")
def cli(verbose: bool) -> None:
    """Low-load cuph covers and partitions of graphs and d-uniform hypergraphs."""
    configure_logging("DEBUG" if verbose else None)


# --------------------------
# Subcommands
# --------------------------
cli.add_command(ep.command)
cli.add_command(lift.command)
cli.add_command(dense.command)
cli.add_command(oracle.command)
cli.add_command(random.command)
cli.add_command(verify.command)
cli.add_command(bound.command)


def run(argv: Sequence[str]) -> int:
    """Run one command line; 0 on success, 2 on a failed validation, 1 on any other error."""
    try:
        result = cli.main(args=list(argv), prog_name="cuphcover", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        return 1
    except CuphCoverError as exc:
        click.echo(f"error: {exc}", err=True)
        return exc.exit_code
    except ValidationError as exc:
        click.echo(f"error: {exc.errors()[0]['msg']}", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
