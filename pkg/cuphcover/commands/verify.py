import click

from cuphcover.commands.options import family_option, host_options, load_host, mode_option
from cuphcover.commands.report import cover_summary, emit, require_valid
from cuphcover.core.rational import render
from cuphcover.io.cover_file import read_cover
from cuphcover.schemas.enums import Mode
from cuphcover.services.coverage import validate_cover


@click.command("verify")
@host_options
@click.option("--cover", "cover_path", type=click.Path(exists=True, dir_okay=False), required=True)
@mode_option(Mode.PARTITION)
@family_option(None)
@click.option("--json", "as_json", is_flag=True)
def command(input_path, graph_name, cover_path, mode, family, as_json):
    """Validate a .cover file against its host; exit 2 when it fails in the given mode."""
    host = load_host(input_path, graph_name)
    cover = read_cover(cover_path, host, mode=mode, family=family)
    report = validate_cover(cover)
    details = {
        "min_coverage": render(report.min_coverage) if report.min_coverage is not None else "none",
        "max_coverage": render(report.max_coverage) if report.max_coverage is not None else "none",
        "violations": str(len(report.violations(mode))),
        "foreign_items": str(len(report.foreign_items)),
    }
    summary = cover_summary("verify", cover, {"mode": mode.value, "family": cover.family.value}, details=details)
    emit(summary, as_json)
    require_valid(summary, partition=mode is Mode.PARTITION)
