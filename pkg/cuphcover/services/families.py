"""Named hypergraph families, plus the `K5`, `C6`, `P4`, `K2,3`, `K5^3` names the CLI accepts."""
import re
from itertools import combinations

from cuphcover.core.errors import PreconditionError
from cuphcover.schemas.hypergraph import Hypergraph


def complete(n: int, d: int = 2) -> Hypergraph:
    return Hypergraph.of(n, combinations(range(n), d), d=d)


def empty(n: int, d: int = 2) -> Hypergraph:
    return Hypergraph(n=n, d=d)


def cycle(n: int) -> Hypergraph:
    if n < 3:
        raise PreconditionError(f"a cycle needs n >= 3, got {n}")
    return Hypergraph.of(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Hypergraph:
    return Hypergraph.of(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Hypergraph:
    return Hypergraph.of(a + b, ((u, a + v) for u in range(a) for v in range(b)))


_NAMED = re.compile(r"^(?P<kind>[KCP])(?P<n>\d+)(?:,(?P<b>\d+))?(?:\^(?P<d>\d+))?$")


def named(name: str) -> Hypergraph:
    match = _NAMED.match(name.strip())
    if not match:
        raise PreconditionError(f"unknown graph name '{name}'")
    kind, n = match["kind"], int(match["n"])
    if match["b"] is not None:
        if kind != "K" or match["d"]:
            raise PreconditionError(f"'{name}': only K<a>,<b> takes two sizes")
        return complete_bipartite(n, int(match["b"]))
    if match["d"] is not None:
        if kind != "K":
            raise PreconditionError(f"'{name}': only K<n>^<d> takes a uniformity")
        return complete(n, int(match["d"]))
    return {"K": complete, "C": cycle, "P": path}[kind](n)
