from fractions import Fraction

import pytest

from cuphcover.schemas.oracle import LPStatus, Sense
from cuphcover.services.lp import LinearProgram


def two_cuts() -> tuple[LinearProgram, int, int]:
    program = LinearProgram()
    x, y = program.add_variable(1), program.add_variable(1)
    program.add_constraint({x: 1, y: 2}, Sense.GE, 2)
    program.add_constraint({x: 3, y: 1}, Sense.GE, 3)
    return program, x, y


@pytest.mark.parametrize("switch", [0, 1, 50])
def test_optimum_is_exact(switch):
    program, x, y = two_cuts()
    solution = program.solve(degenerate_switch=switch)
    assert solution.status is LPStatus.OPTIMAL
    assert solution.objective == Fraction(7, 5)
    assert (solution.x[x], solution.x[y]) == (Fraction(4, 5), Fraction(3, 5))


def test_infeasible():
    program = LinearProgram()
    x = program.add_variable(1)
    program.add_constraint({x: 1}, Sense.LE, -1)
    assert program.solve().status is LPStatus.INFEASIBLE


def test_unbounded():
    program = LinearProgram()
    x = program.add_variable(-1)
    program.add_constraint({x: 1}, Sense.GE, 1)
    assert program.solve().status is LPStatus.UNBOUNDED


def test_equality_rows():
    program = LinearProgram()
    x, y = program.add_variable(1), program.add_variable(0)
    program.add_constraint({x: 1, y: 1}, Sense.EQ, 1)
    program.add_constraint({y: 1}, Sense.LE, Fraction(1, 2))
    solution = program.solve()
    assert solution.objective == Fraction(1, 2)
    assert solution.x == (Fraction(1, 2), Fraction(1, 2))


def test_redundant_equalities_keep_feasibility():
    program = LinearProgram()
    x, y = program.add_variable(1), program.add_variable(2)
    program.add_constraint({x: 1, y: 1}, Sense.EQ, 1)
    program.add_constraint({x: 2, y: 2}, Sense.EQ, 2)
    solution = program.solve()
    assert solution.status is LPStatus.OPTIMAL
    assert solution.objective == 1
    assert solution.x == (1, 0)


def test_min_max_load_shape():
    """minimize r with three pairwise 'edges' over a triangle of unit columns."""
    program = LinearProgram()
    w = [program.add_variable(0) for _ in range(3)]
    r = program.add_variable(1)
    for a, b in ((0, 1), (1, 2), (0, 2)):
        program.add_constraint({w[a]: 1, w[b]: 1}, Sense.GE, 1)
    for j in range(3):
        program.add_constraint({w[j]: 1, r: -1}, Sense.LE, 0)
    solution = program.solve()
    assert solution.objective == Fraction(1, 2)
