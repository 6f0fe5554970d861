"""Brute-force reference optimum: enumerate every integral assignment."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .lp import DualSimplex
from .model import MilpProblem

MAX_ASSIGNMENTS = 2 ** 20
CHUNK = 1 << 14


class OracleRefused(ValueError):
    pass


@dataclass
class OracleResult:
    status: str
    objective: float | None
    point: np.ndarray | None
    evaluated: int


def domain_size(problem: MilpProblem) -> int:
    lp = problem.lp
    ints = problem.integer_indices
    if not problem.oracle_ok:
        raise OracleRefused("integer variables must be box-bounded")
    sizes = np.maximum(lp.upper[ints] - lp.lower[ints] + 1, 0)
    total = 1
    for s in sizes:
        total *= int(s)
    return total


def enumerate_optimum(problem: MilpProblem, tol: float = 1e-9) -> OracleResult:
    """Exact optimum (in the problem's own sense) by lexicographic enumeration.

    Pure integer problems are checked directly; mixed problems solve one LP
    over the continuous variables per assignment.
    """
    total = domain_size(problem)
    if total > MAX_ASSIGNMENTS:
        raise OracleRefused(f"{total} assignments exceed the cap of {MAX_ASSIGNMENTS}")
    lp = problem.lp
    ints = problem.integer_indices
    n = lp.num_vars
    ranges = [range(int(lp.lower[j]), int(lp.upper[j]) + 1) for j in ints]
    if total == 0:
        return OracleResult("infeasible", None, None, 0)
    if len(ints) == n:
        return _pure(problem, ranges, total, tol)
    return _mixed(problem, ranges, total)


def _pure(problem, ranges, total, tol) -> OracleResult:
    lp = problem.lp
    best_val, best_x = np.inf, None
    it = itertools.product(*ranges)
    while True:
        block = list(itertools.islice(it, CHUNK))
        if not block:
            break
        X = np.array(block, dtype=float).reshape(len(block), lp.num_vars)
        feasible = np.all(X @ lp.A.T >= lp.rhs - tol, axis=1) if lp.num_rows else np.ones(len(X), bool)
        if not feasible.any():
            continue
        vals = X @ lp.objective
        vals[~feasible] = np.inf
        k = int(np.argmin(vals))  # first minimum keeps lexicographic tie-break
        if vals[k] < best_val:
            best_val, best_x = float(vals[k]), X[k].copy()
    if best_x is None:
        return OracleResult("infeasible", None, None, total)
    return OracleResult("optimal", problem.user_objective(best_val), best_x, total)


def _mixed(problem, ranges, total) -> OracleResult:
    lp = problem.lp
    ints = problem.integer_indices
    solver = DualSimplex(lp)
    best_val, best_x = np.inf, None
    unbounded = False
    for assignment in itertools.product(*ranges):
        lower, upper = lp.lower.copy(), lp.upper.copy()
        lower[ints] = assignment
        upper[ints] = assignment
        out = solver.solve(lower, upper)
        if out.status.value == "unbounded":
            unbounded = True
            continue
        if out.optimal and out.objective < best_val - 1e-12:
            best_val, best_x = out.objective, out.primal.copy()
    if unbounded:
        return OracleResult("unbounded", None, None, total)
    if best_x is None:
        return OracleResult("infeasible", None, None, total)
    return OracleResult("optimal", problem.user_objective(best_val), best_x, total)
