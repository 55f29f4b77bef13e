"""Exact two-phase revised simplex over Fractions.

Columns are sparse {row: coefficient} maps and the basis inverse is kept
explicitly. Pricing is Dantzig's rule until a run of degenerate pivots,
then Bland's rule until the objective moves again.
"""
import logging
from fractions import Fraction

from cuphcover.core.config import settings
from cuphcover.schemas.oracle import LPSolution, LPStatus, Sense

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class LinearProgram:
    """minimize c.x subject to rows of the form a.x (<=|>=|=) b and x >= 0."""

    def __init__(self) -> None:
        self.costs: list[Fraction] = []
        self.rows: list[tuple[dict[int, Fraction], Sense, Fraction]] = []

    def add_variable(self, cost: Fraction | int = 0) -> int:
        self.costs.append(Fraction(cost))
        return len(self.costs) - 1

    def add_constraint(self, coeffs: dict[int, Fraction | int], sense: Sense, rhs: Fraction | int) -> None:
        self.rows.append(({j: Fraction(a) for j, a in coeffs.items() if a}, sense, Fraction(rhs)))

    def solve(self, degenerate_switch: int | None = None) -> LPSolution:
        switch = int(settings.get("LP_DEGENERATE_SWITCH", 50) if degenerate_switch is None else degenerate_switch)
        return _Simplex(self, switch).run()


class _Simplex:
    def __init__(self, program: LinearProgram, switch: int) -> None:
        self.switch = switch
        self.structural = len(program.costs)
        self.columns: list[dict[int, Fraction]] = [{} for _ in program.costs]
        self.artificial: list[bool] = [False] * self.structural
        self.rhs: list[Fraction] = []
        self.basis: list[int] = []
        self.pivots = 0

        for i, (coeffs, sense, rhs) in enumerate(program.rows):
            if rhs < 0:
                coeffs = {j: -a for j, a in coeffs.items()}
                rhs = -rhs
                sense = {Sense.LE: Sense.GE, Sense.GE: Sense.LE, Sense.EQ: Sense.EQ}[sense]
            for j, a in coeffs.items():
                self.columns[j][i] = a
            self.rhs.append(rhs)
            if sense is Sense.LE:
                self.basis.append(self._add_column({i: ONE}))
            else:
                if sense is Sense.GE:
                    self._add_column({i: -ONE})
                self.basis.append(self._add_column({i: ONE}, artificial=True))

        m = len(self.rhs)
        self.inverse = [[ONE if r == c else ZERO for c in range(m)] for r in range(m)]
        self.values = list(self.rhs)
        self.phase2_costs = list(program.costs) + [ZERO] * (len(self.columns) - self.structural)

    def _add_column(self, column: dict[int, Fraction], artificial: bool = False) -> int:
        self.columns.append(column)
        self.artificial.append(artificial)
        return len(self.columns) - 1

    def _objective(self, costs: list[Fraction]) -> Fraction:
        return sum((costs[j] * x for j, x in zip(self.basis, self.values)), ZERO)

    def _entering_column(self, column: dict[int, Fraction]) -> list[Fraction]:
        return [sum((row[k] * a for k, a in column.items()), ZERO) for row in self.inverse]

    def _pivot(self, leave: int, enter: int, direction: list[Fraction]) -> None:
        pivot = direction[leave]
        theta = self.values[leave] / pivot
        pivot_row = [a / pivot for a in self.inverse[leave]]
        for i, u in enumerate(direction):
            if i == leave or not u:
                continue
            self.values[i] -= theta * u
            self.inverse[i] = [a - u * b for a, b in zip(self.inverse[i], pivot_row)]
        self.values[leave] = theta
        self.inverse[leave] = pivot_row
        self.basis[leave] = enter
        self.pivots += 1

    def _optimize(self, costs: list[Fraction], allowed: list[bool]) -> LPStatus:
        m = len(self.rhs)
        bland, streak = False, 0
        while True:
            duals = [
                sum((costs[self.basis[i]] * self.inverse[i][k] for i in range(m)), ZERO)
                for k in range(m)
            ]
            in_basis = set(self.basis)
            enter, best = None, ZERO
            for j, column in enumerate(self.columns):
                if not allowed[j] or j in in_basis:
                    continue
                reduced = costs[j] - sum((duals[k] * a for k, a in column.items()), ZERO)
                if reduced < best:
                    enter, best = j, reduced
                    if bland:
                        break
            if enter is None:
                return LPStatus.OPTIMAL

            direction = self._entering_column(self.columns[enter])
            leave, ratio = None, None
            for i, u in enumerate(direction):
                if u > 0:
                    candidate = self.values[i] / u
                    if (
                        ratio is None
                        or candidate < ratio
                        or (candidate == ratio and self.basis[i] < self.basis[leave])
                    ):
                        leave, ratio = i, candidate
            if leave is None:
                return LPStatus.UNBOUNDED

            if ratio == 0:
                streak += 1
                if streak >= self.switch and not bland:
                    logger.debug("%d degenerate pivots, switching to Bland's rule", streak)
                    bland = True
            else:
                bland, streak = False, 0
            self._pivot(leave, enter, direction)

    def _drive_out_artificials(self) -> None:
        for row, j in enumerate(self.basis):
            if not self.artificial[j]:
                continue
            in_basis = set(self.basis)
            for candidate, column in enumerate(self.columns):
                if self.artificial[candidate] or candidate in in_basis:
                    continue
                direction = self._entering_column(column)
                if direction[row]:
                    self._pivot(row, candidate, direction)
                    break

    def run(self) -> LPSolution:
        if any(self.artificial):
            phase1_costs = [ONE if a else ZERO for a in self.artificial]
            self._optimize(phase1_costs, [True] * len(self.columns))
            if self._objective(phase1_costs) > 0:
                return LPSolution(status=LPStatus.INFEASIBLE, pivots=self.pivots)
            self._drive_out_artificials()

        allowed = [not a for a in self.artificial]
        status = self._optimize(self.phase2_costs, allowed)
        if status is LPStatus.UNBOUNDED:
            return LPSolution(status=status, pivots=self.pivots)

        x = [ZERO] * self.structural
        for j, value in zip(self.basis, self.values):
            if j < self.structural:
                x[j] = value
        return LPSolution(
            status=LPStatus.OPTIMAL,
            x=tuple(x),
            objective=self._objective(self.phase2_costs),
            pivots=self.pivots,
        )
