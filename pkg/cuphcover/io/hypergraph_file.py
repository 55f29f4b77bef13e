"""`.uhg` files: a `d n` header, then one edge per line as d vertex indices.

Blank lines and lines starting with `#` are ignored.
"""
from pathlib import Path

from cuphcover.core.errors import MalformedFileError
from cuphcover.schemas.hypergraph import Hypergraph


# -------------------------------------------------------
# Helper: integers of one line, or a located error
# -------------------------------------------------------
def parse_ints(path: str, line_no: int, line: str, expected: int, label: str) -> list[int]:
    fields = line.split()
    if len(fields) != expected:
        raise MalformedFileError(path, line_no, f"{label} needs {expected} integers, got {len(fields)}")
    try:
        return [int(field) for field in fields]
    except ValueError as exc:
        raise MalformedFileError(path, line_no, f"{label} has a non-integer field") from exc


def content_lines(text: str) -> list[tuple[int, str]]:
    """(1-based line number, stripped line), skipping blanks and comments."""
    return [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]


def parse_hypergraph(text: str, path: str = "<string>") -> Hypergraph:
    lines = content_lines(text)
    if not lines:
        raise MalformedFileError(path, 1, "missing `d n` header")
    header_no, header = lines[0]
    d, n = parse_ints(path, header_no, header, 2, "header")
    if d < 2 or n < 0:
        raise MalformedFileError(path, header_no, f"header needs d >= 2 and n >= 0, got d={d} n={n}")

    edges: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for number, line in lines[1:]:
        edge = tuple(sorted(parse_ints(path, number, line, d, "edge")))
        if len(set(edge)) != d:
            raise MalformedFileError(path, number, f"edge {edge} repeats a vertex")
        if edge[0] < 0 or edge[-1] >= n:
            raise MalformedFileError(path, number, f"edge {edge} has a vertex outside 0..{n - 1}")
        if edge in seen:
            raise MalformedFileError(path, number, f"duplicate edge {edge} (first on line {seen[edge]})")
        seen[edge] = number
        edges.append(edge)
    return Hypergraph.of(n, edges, d=d)


def format_hypergraph(host: Hypergraph) -> str:
    lines = [f"{host.d} {host.n}"] + [" ".join(map(str, edge)) for edge in host.edges]
    return "\n".join(lines) + "\n"


def read_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text(), str(path))


def write_hypergraph(host: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(format_hypergraph(host))
