"""`.cover` files: a `d n count` header, then `num/den k p1;p2;...;pk` per item.

Each part is a comma-separated list of sorted vertex indices. The host is
not stored; the reader checks the header against the host it is given.
"""
from fractions import Fraction
from pathlib import Path

from pydantic import ValidationError

from cuphcover.core.errors import MalformedFileError
from cuphcover.core.rational import format_fraction
from cuphcover.io.hypergraph_file import content_lines, parse_ints
from cuphcover.schemas.cover import WeightedCover
from cuphcover.schemas.enums import Family, Mode
from cuphcover.schemas.hypergraph import Cuph, Hypergraph


def _parse_weight(path: str, number: int, text: str) -> Fraction:
    numerator, slash, denominator = text.partition("/")
    try:
        weight = Fraction(int(numerator), int(denominator)) if slash else Fraction(int(numerator))
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedFileError(path, number, f"weight '{text}' is not num/den") from exc
    if weight <= 0:
        raise MalformedFileError(path, number, f"weight {text} is not positive")
    return weight


def _parse_parts(path: str, number: int, text: str, k: int) -> tuple[tuple[int, ...], ...]:
    chunks = text.split(";")
    if len(chunks) != k:
        raise MalformedFileError(path, number, f"expected {k} parts, got {len(chunks)}")
    try:
        return tuple(tuple(int(v) for v in chunk.split(",")) for chunk in chunks)
    except ValueError as exc:
        raise MalformedFileError(path, number, f"part list '{text}' is not comma-separated integers") from exc


def parse_cover(
    text: str,
    host: Hypergraph,
    path: str = "<string>",
    mode: Mode = Mode.PARTITION,
    family: Family | None = None,
) -> WeightedCover:
    """Read items onto `host`; the family defaults to CB when every item has d parts."""
    lines = content_lines(text)
    if not lines:
        raise MalformedFileError(path, 1, "missing `d n count` header")
    header_no, header = lines[0]
    d, n, count = parse_ints(path, header_no, header, 3, "header")
    if (d, n) != (host.d, host.n):
        raise MalformedFileError(path, header_no, f"cover is for d={d} n={n}, host has d={host.d} n={host.n}")
    if count != len(lines) - 1:
        raise MalformedFileError(path, header_no, f"header announces {count} items, file has {len(lines) - 1}")

    items: list[tuple[Cuph, Fraction]] = []
    for number, line in lines[1:]:
        fields = line.split()
        if len(fields) != 3:
            raise MalformedFileError(path, number, "item needs `num/den k parts`")
        weight = _parse_weight(path, number, fields[0])
        try:
            k = int(fields[1])
        except ValueError as exc:
            raise MalformedFileError(path, number, f"part count '{fields[1]}' is not an integer") from exc
        parts = _parse_parts(path, number, fields[2], k)
        if any(v < 0 or v >= n for part in parts for v in part):
            raise MalformedFileError(path, number, f"a vertex lies outside 0..{n - 1}")
        try:
            items.append((Cuph(d=d, parts=parts), weight))
        except ValidationError as exc:
            raise MalformedFileError(path, number, exc.errors()[0]["msg"]) from exc

    if family is None:
        family = Family.CB if all(cuph.k == d for cuph, _ in items) else Family.CM
    return WeightedCover.build(host, items, mode=mode, family=family)


def format_cover(cover: WeightedCover) -> str:
    lines = [f"{cover.host.d} {cover.host.n} {len(cover.items)}"]
    for item in cover.items:
        parts = ";".join(",".join(map(str, part)) for part in item.cuph.parts)
        lines.append(f"{format_fraction(item.weight)} {item.cuph.k} {parts}")
    return "\n".join(lines) + "\n"


def read_cover(path: str | Path, host: Hypergraph, mode: Mode = Mode.PARTITION, family: Family | None = None) -> WeightedCover:
    return parse_cover(Path(path).read_text(), host, str(path), mode, family)


def write_cover(cover: WeightedCover, path: str | Path) -> None:
    Path(path).write_text(format_cover(cover))
