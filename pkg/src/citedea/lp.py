"""A small deterministic two-phase simplex solver for dense maximization programs.

The solver targets the tiny programs produced by the efficiency module (tens
of variables and constraints at most), so it favors robustness over speed:
Bland's rule guards against cycling and makes every run of the same program
pivot identically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

PIVOT_TOL = 1e-9
FEASIBILITY_TOL = 1e-7


class Relation(Enum):
    """Constraint sense."""

    LE = "<="
    EQ = "="
    GE = ">="


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    """coefficients . x  (relation)  rhs"""

    coefficients: tuple[float, ...]
    relation: Relation
    rhs: float

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coefficients", tuple(float(c) for c in self.coefficients)
        )
        object.__setattr__(self, "relation", Relation(self.relation))
        object.__setattr__(self, "rhs", float(self.rhs))


@dataclass(frozen=True)
class LinearProgram:
    """Maximize objective . x subject to constraints and x >= lower_bounds."""

    objective: tuple[float, ...]
    constraints: tuple[Constraint, ...]
    lower_bounds: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "objective", tuple(float(c) for c in self.objective))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        object.__setattr__(
            self, "lower_bounds", tuple(float(b) for b in self.lower_bounds)
        )
        size = len(self.objective)
        if size == 0:
            raise ValueError("objective must cover at least one variable")
        if len(self.lower_bounds) != size:
            raise ValueError(
                f"lower_bounds has {len(self.lower_bounds)} entries, expected {size}"
            )
        for position, constraint in enumerate(self.constraints):
            if len(constraint.coefficients) != size:
                raise ValueError(
                    f"constraint {position} has {len(constraint.coefficients)} "
                    f"coefficients, expected {size}"
                )

    @property
    def variable_count(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpSolution:
    """Solver result; objective_value and variable_values are NaN/empty unless OPTIMAL."""

    status: LpStatus
    objective_value: float
    variable_values: tuple[float, ...]

    @property
    def is_optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


_FLIP = {Relation.LE: Relation.GE, Relation.GE: Relation.LE, Relation.EQ: Relation.EQ}


def _pivot(
    tableau: np.ndarray,
    basis: np.ndarray,
    row: int,
    column: int,
    objective_row: np.ndarray | None = None,
) -> None:
    tableau[row] /= tableau[row, column]
    for other in range(tableau.shape[0]):
        if other != row and tableau[other, column] != 0.0:
            tableau[other] -= tableau[other, column] * tableau[row]
    if objective_row is not None and objective_row[column] != 0.0:
        objective_row -= objective_row[column] * tableau[row]
    basis[row] = column


def _optimize(
    tableau: np.ndarray, objective_row: np.ndarray, basis: np.ndarray
) -> LpStatus:
    """Pivot until no reduced cost improves the (maximized) objective row.

    Bland's rule on both choices: the entering column is the lowest-index
    improving one, and ratio ties leave the lowest-index basic variable.
    """
    columns = tableau.shape[1] - 1
    # Bland's rule cannot cycle in exact arithmetic; the cap only guards
    # against float-tolerance stalls turning into a hang
    for _ in range(10_000 + 100 * columns):
        entering = -1
        for column in range(columns):
            if objective_row[column] < -PIVOT_TOL:
                entering = column
                break
        if entering < 0:
            return LpStatus.OPTIMAL
        leaving = -1
        best_ratio = math.inf
        for row in range(tableau.shape[0]):
            step = tableau[row, entering]
            if step > PIVOT_TOL:
                ratio = tableau[row, -1] / step
                if ratio < best_ratio - PIVOT_TOL or (
                    ratio <= best_ratio + PIVOT_TOL
                    and (leaving < 0 or basis[row] < basis[leaving])
                ):
                    best_ratio = min(ratio, best_ratio)
                    leaving = row
        if leaving < 0:
            return LpStatus.UNBOUNDED
        _pivot(tableau, basis, leaving, entering, objective_row)
    raise ArithmeticError("simplex iteration limit reached; program is ill conditioned")


def _reduced_row(
    tableau: np.ndarray, basis: np.ndarray, costs: np.ndarray
) -> np.ndarray:
    """Objective row with the basic columns priced out; last cell is the value."""
    row = np.concatenate([-costs, [0.0]])
    for position, column in enumerate(basis):
        if row[column] != 0.0:
            row -= row[column] * tableau[position]
    return row


def solve_lp(lp: LinearProgram) -> LpSolution:
    """Solve a maximization program with a two-phase dense simplex.

    Variables are shifted by their lower bounds into standard form, right
    hand sides are normalized non-negative, and artificial variables carry
    phase one.  The result is deterministic for identical input.
    """
    size = lp.variable_count
    shift = np.asarray(lp.lower_bounds, dtype=float)

    rows: list[np.ndarray] = []
    senses: list[Relation] = []
    rhs: list[float] = []
    for constraint in lp.constraints:
        coefficients = np.asarray(constraint.coefficients, dtype=float)
        value = constraint.rhs - float(coefficients @ shift)
        relation = constraint.relation
        if value < 0:
            coefficients = -coefficients
            value = -value
            relation = _FLIP[relation]
        rows.append(coefficients)
        senses.append(relation)
        rhs.append(value)

    count = len(rows)
    slack_count = sum(1 for sense in senses if sense is not Relation.EQ)
    artificial_count = sum(1 for sense in senses if sense is not Relation.LE)
    total = size + slack_count + artificial_count
    tableau = np.zeros((count, total + 1))
    basis = np.zeros(count, dtype=int)
    next_slack = size
    next_artificial = size + slack_count
    for position in range(count):
        tableau[position, :size] = rows[position]
        tableau[position, -1] = rhs[position]
        sense = senses[position]
        if sense is Relation.LE:
            tableau[position, next_slack] = 1.0
            basis[position] = next_slack
            next_slack += 1
        else:
            if sense is Relation.GE:
                tableau[position, next_slack] = -1.0
                next_slack += 1
            tableau[position, next_artificial] = 1.0
            basis[position] = next_artificial
            next_artificial += 1

    first_artificial = size + slack_count
    if artificial_count:
        costs = np.zeros(total)
        costs[first_artificial:] = -1.0
        phase_one = _reduced_row(tableau, basis, costs)
        _optimize(tableau, phase_one, basis)
        if phase_one[-1] < -FEASIBILITY_TOL:
            return LpSolution(LpStatus.INFEASIBLE, math.nan, ())
        # pivot leftover artificials out of the basis; rows that offer no
        # pivot are redundant restatements of other rows and are dropped
        drop: list[int] = []
        for position in range(count):
            if basis[position] >= first_artificial:
                column = -1
                for candidate in range(first_artificial):
                    if abs(tableau[position, candidate]) > PIVOT_TOL:
                        column = candidate
                        break
                if column >= 0:
                    _pivot(tableau, basis, position, column)
                else:
                    drop.append(position)
        if drop:
            tableau = np.delete(tableau, drop, axis=0)
            basis = np.delete(basis, drop)
        tableau = np.delete(
            tableau, np.s_[first_artificial : first_artificial + artificial_count], axis=1
        )

    costs = np.zeros(tableau.shape[1] - 1)
    costs[:size] = lp.objective
    phase_two = _reduced_row(tableau, basis, costs)
    if _optimize(tableau, phase_two, basis) is LpStatus.UNBOUNDED:
        return LpSolution(LpStatus.UNBOUNDED, math.nan, ())

    shifted = np.zeros(tableau.shape[1] - 1)
    shifted[basis] = tableau[:, -1]
    values = shifted[:size] + shift
    objective_value = float(np.asarray(lp.objective) @ values)
    return LpSolution(
        LpStatus.OPTIMAL, objective_value, tuple(float(v) for v in values)
    )
