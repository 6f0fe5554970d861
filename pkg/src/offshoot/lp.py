"""Bounded-variable dual simplex.

Every model is stored with its rows normalized to ``a x >= b``. The solver
works on ``[A, -I] (x, s) = 0`` where the slack ``s_i = a_i x`` lives in
``[b_i, +inf)``. A solve can start from the slack basis or from any stored
basis; a hotstart is a solve from the previous basis with one bound moved.

The per-variable dual information vector ``r`` has the same meaning in both
terminal cases: for an optimal LP it is the reduced cost vector, for an
infeasible LP it is ``-(y^T A)`` for the Farkas multipliers ``y >= 0``. In
both cases a lower bound with ``r_i <= 0`` or an upper bound with
``r_i >= 0`` can be relaxed without invalidating the pruning argument.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

FEAS_TOL = 1e-7
ZERO_TOL = 1e-9
PIVOT_TOL = 1e-9
DUAL_TOL = 1e-9
ARTIFICIAL_BOUND = 1e7
# successively larger artificial bounds tried when a result hinges on one
ARTIFICIAL_STEPS = (ARTIFICIAL_BOUND, 1e10, 1e13)
STALL_LIMIT = 50
REFACTOR_EVERY = 40

BASIC, AT_LOWER, AT_UPPER, FREE = 0, 1, 2, 3


class LpError(Exception):
    """Raised for malformed models or misuse of an outcome."""


class LpStatus(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    DUAL_UNBOUNDED = "dual-unbounded-treated-as-infeasible"
    ITERATION_LIMIT = "iteration-limit"
    UNBOUNDED = "unbounded"

    @property
    def infeasible(self) -> bool:
        return self in (LpStatus.INFEASIBLE, LpStatus.DUAL_UNBOUNDED)


@dataclass(frozen=True, eq=False)
class LpModel:
    """``min c x`` subject to ``A x >= b`` and ``lower <= x <= upper``."""

    objective: np.ndarray
    A: np.ndarray
    rhs: np.ndarray
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        n = self.objective.shape[0]
        if self.A.shape != (self.rhs.shape[0], n):
            raise LpError(f"constraint matrix shape {self.A.shape} does not match "
                          f"{self.rhs.shape[0]} rows x {n} columns")
        if self.lower.shape != (n,) or self.upper.shape != (n,):
            raise LpError("bound vectors must have one entry per variable")
        for label, arr in (("objective", self.objective), ("matrix", self.A), ("rhs", self.rhs)):
            if not np.all(np.isfinite(arr)):
                raise LpError(f"non-finite value in {label}")
        if np.any(np.isnan(self.lower)) or np.any(np.isnan(self.upper)):
            raise LpError("NaN bound")
        bad = np.flatnonzero(self.lower > self.upper)
        if bad.size:
            j = int(bad[0])
            raise LpError(f"variable {j} has lower bound {self.lower[j]} > upper bound {self.upper[j]}")

    @property
    def num_vars(self) -> int:
        return self.objective.shape[0]

    @property
    def num_rows(self) -> int:
        return self.rhs.shape[0]

    @classmethod
    def from_rows(cls, objective: Sequence[float],
                  rows: Sequence[tuple[Mapping[int, float], str, float]],
                  lower: Sequence[float], upper: Sequence[float]) -> "LpModel":
        """Build a model from ``(coefs, sense, rhs)`` rows with sense in ``>=, <=, =``.

        ``<=`` rows are negated and ``=`` rows become two ``>=`` rows.
        """
        c = np.asarray(objective, dtype=float)
        n = c.shape[0]
        dense, b = [], []
        for coefs, sense, rhs in rows:
            a = np.zeros(n)
            for j, v in coefs.items():
                a[j] += v
            if sense in (">=", "G"):
                dense.append(a); b.append(rhs)
            elif sense in ("<=", "L"):
                dense.append(-a); b.append(-rhs)
            elif sense in ("=", "==", "E"):
                dense.append(a); b.append(rhs)
                dense.append(-a); b.append(-rhs)
            else:
                raise LpError(f"unknown row sense {sense!r}")
        A = np.array(dense, dtype=float).reshape(len(dense), n)
        return cls(c, A, np.asarray(b, dtype=float),
                   np.asarray(lower, dtype=float).copy(), np.asarray(upper, dtype=float).copy())


@dataclass(frozen=True, eq=False)
class Basis:
    """Basis snapshot over the ``n`` structural and ``m`` slack columns."""

    head: np.ndarray
    status: np.ndarray

    def __post_init__(self):
        if int(np.count_nonzero(self.status == BASIC)) != self.head.shape[0]:
            raise LpError("basis must have exactly one basic column per row")

    @classmethod
    def slack(cls, n: int, m: int) -> "Basis":
        status = np.full(n + m, AT_LOWER, dtype=np.int8)
        status[n:] = BASIC
        return cls(np.arange(n, n + m), status)


@dataclass(eq=False)
class LpOutcome:
    status: LpStatus
    objective: float
    primal: np.ndarray
    dual_info: np.ndarray
    row_duals: np.ndarray
    basis: Basis
    iterations: int = 0
    crossed: int | None = None
    notes: dict = field(default_factory=dict)

    @property
    def optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL

    @property
    def infeasible(self) -> bool:
        return self.status.infeasible


class DualSimplex:
    """Dense dual simplex for one model; not thread-safe, cheap to create."""

    def __init__(self, model: LpModel):
        self.model = model
        n, m = model.num_vars, model.num_rows
        self.n, self.m = n, m
        self.K = np.hstack([model.A, -np.eye(m)])
        self.cost = np.concatenate([model.objective, np.zeros(m)])
        self.iteration_cap = 100 * (n + m) + 100
        self._big = ARTIFICIAL_BOUND

    def solve(self, lower: np.ndarray | None = None, upper: np.ndarray | None = None,
              basis: Basis | None = None, max_iter: int | None = None) -> LpOutcome:
        """Dual simplex from ``basis`` (slack basis if None) under the given bounds.

        Infinite bounds on the side a reduced cost pushes toward are replaced
        by an artificial bound. If the answer depends on one (a certificate
        that is invalid for the true bounds, or an optimum stuck on it) the
        solve is repeated with larger artificial bounds.
        """
        model = self.model
        lower = model.lower if lower is None else np.asarray(lower, dtype=float)
        upper = model.upper if upper is None else np.asarray(upper, dtype=float)
        for big in ARTIFICIAL_STEPS:
            self._big = big
            out = self._solve(lower, upper, basis, max_iter)
            if not out.notes.get("artificial"):
                return out
            if out.status is LpStatus.DUAL_UNBOUNDED:
                if farkas_gap(model, lower, upper, out.row_duals, out.dual_info) > FEAS_TOL:
                    return out
            elif out.status is not LpStatus.UNBOUNDED:
                return out
        if out.status is LpStatus.DUAL_UNBOUNDED:
            out.status = LpStatus.ITERATION_LIMIT
            out.notes["reason"] = "infeasibility proof relies on an artificial bound"
        return out

    def _solve(self, lower, upper, basis, max_iter) -> LpOutcome:
        model = self.model
        n, m = self.n, self.m
        crossed = np.flatnonzero(lower > upper + FEAS_TOL)
        if crossed.size:
            return self._crossed(lower, upper, basis, int(crossed[0]))
        lo = np.concatenate([lower, model.rhs])
        hi = np.concatenate([upper, np.full(m, np.inf)])
        cap = self.iteration_cap if max_iter is None else max_iter
        if basis is None or basis.head.shape[0] != m or basis.status.shape[0] != n + m:
            basis = Basis.slack(n, m)
        head = basis.head.copy()
        status = basis.status.copy()
        K, cost = self.K, self.cost
        try:
            Binv = np.linalg.inv(K[:, head])
        except np.linalg.LinAlgError:
            head = np.arange(n, n + m)
            status = Basis.slack(n, m).status.copy()
            Binv = -np.eye(m)

        y = Binv.T @ cost[head]
        d = cost - K.T @ y
        d[head] = 0.0
        lo_eff, hi_eff = lo.copy(), hi.copy()
        artificial = np.zeros(n + m, dtype=bool)
        x = np.zeros(n + m)
        for j in np.flatnonzero(status != BASIC):
            s = self._place(j, d[j], status[j], lo_eff, hi_eff, artificial)
            status[j] = s
            x[j] = lo_eff[j] if s == AT_LOWER else hi_eff[j] if s == AT_UPPER else 0.0

        iters = 0
        stall = 0
        bland = False
        since_refactor = 0
        while True:
            xn = x.copy()
            xn[head] = 0.0
            xB = -(Binv @ (K @ xn))
            x[head] = xB
            below = lo_eff[head] - xB
            above = xB - hi_eff[head]
            infeas = np.maximum(below, above)
            viol = np.flatnonzero(infeas > FEAS_TOL)
            if viol.size == 0:
                return self._optimal(x, head, status, Binv, lo_eff, hi_eff, artificial, iters)
            if iters >= cap:
                return self._limit(x, head, status, Binv, iters)
            if bland:
                r = int(viol[np.argmin(head[viol])])
            else:
                r = int(np.argmax(infeas))
            leave_low = below[r] > above[r]
            rho = Binv[r]
            alpha = rho @ K
            movable = (status != BASIC) & (lo_eff < hi_eff)
            if leave_low:
                cand = movable & (((status == AT_LOWER) & (alpha < -PIVOT_TOL))
                                  | ((status == AT_UPPER) & (alpha > PIVOT_TOL)))
            else:
                cand = movable & (((status == AT_LOWER) & (alpha > PIVOT_TOL))
                                  | ((status == AT_UPPER) & (alpha < -PIVOT_TOL)))
            cand |= movable & (status == FREE) & (np.abs(alpha) > PIVOT_TOL)
            idx = np.flatnonzero(cand)
            if idx.size == 0:
                out = self._farkas(x, head, status, rho, leave_low, iters)
                if artificial.any():
                    out.notes["artificial"] = True
                return out
            ratios = np.abs(d[idx]) / np.abs(alpha[idx])
            best = ratios.min()
            ties = idx[ratios <= best + 1e-12]
            if bland or ties.size == 1:
                q = int(ties[0])
            else:
                q = int(ties[np.argmax(np.abs(alpha[ties]))])
            if best <= 1e-12:
                stall += 1
                if stall >= STALL_LIMIT:
                    bland = True
            else:
                stall = 0

            theta = d[q] / alpha[q]
            p = int(head[r])
            d -= theta * alpha
            d[head] = 0.0
            d[q] = 0.0
            d[p] = -theta
            col = Binv @ K[:, q]
            piv_row = Binv[r] / col[r]
            Binv -= np.outer(col, piv_row)
            Binv[r] = piv_row
            head[r] = q
            status[q] = BASIC
            status[p] = AT_LOWER if leave_low else AT_UPPER
            x[p] = lo_eff[p] if leave_low else hi_eff[p]
            iters += 1
            since_refactor += 1
            if since_refactor >= REFACTOR_EVERY:
                since_refactor = 0
                Binv = np.linalg.inv(K[:, head])
                y = Binv.T @ cost[head]
                d = cost - K.T @ y
                d[head] = 0.0

    def _place(self, j, dj, current, lo, hi, artificial) -> int:
        """Choose the nonbasic position of column ``j`` that is dual feasible."""
        if lo[j] == hi[j]:
            return AT_LOWER
        if dj > DUAL_TOL:
            want = AT_LOWER
        elif dj < -DUAL_TOL:
            want = AT_UPPER
        elif current == AT_UPPER and np.isfinite(hi[j]):
            return AT_UPPER
        elif np.isfinite(lo[j]):
            return AT_LOWER
        elif np.isfinite(hi[j]):
            return AT_UPPER
        else:
            return FREE
        if want == AT_LOWER and not np.isfinite(lo[j]):
            lo[j] = (hi[j] if np.isfinite(hi[j]) else 0.0) - self._big
            artificial[j] = True
        elif want == AT_UPPER and not np.isfinite(hi[j]):
            hi[j] = (lo[j] if np.isfinite(lo[j]) else 0.0) + self._big
            artificial[j] = True
        return want

    def _optimal(self, x, head, status, Binv, lo_eff, hi_eff, artificial, iters) -> LpOutcome:
        n, m = self.n, self.m
        K, cost = self.K, self.cost
        y = Binv.T @ cost[head]
        d = cost - K.T @ y
        d[head] = 0.0
        d[np.abs(d) < 1e-12] = 0.0
        basis = Basis(head.copy(), status.copy())
        objective = float(cost[:n] @ x[:n])
        stuck = artificial & (status != BASIC) & (np.abs(d) > DUAL_TOL) & (
            (x <= lo_eff) | (x >= hi_eff))
        if stuck.any():
            return LpOutcome(LpStatus.UNBOUNDED, -np.inf, x[:n].copy(), d[:n].copy(), y.copy(),
                             basis, iters, notes={"artificial": True})
        return LpOutcome(LpStatus.OPTIMAL, objective, x[:n].copy(), d[:n].copy(), y.copy(),
                         basis, iters)

    def _limit(self, x, head, status, Binv, iters) -> LpOutcome:
        n = self.n
        y = Binv.T @ self.cost[head]
        d = self.cost - self.K.T @ y
        d[head] = 0.0
        return LpOutcome(LpStatus.ITERATION_LIMIT, float(self.cost[:n] @ x[:n]), x[:n].copy(),
                         d[:n].copy(), y.copy(), Basis(head.copy(), status.copy()), iters)

    def _farkas(self, x, head, status, rho, leave_low, iters) -> LpOutcome:
        n = self.n
        y = -rho if leave_low else rho.copy()
        y = np.where(np.abs(y) < 1e-12, 0.0, y)
        r = -(y @ self.model.A)
        r[np.abs(r) < 1e-12] = 0.0
        return LpOutcome(LpStatus.DUAL_UNBOUNDED, np.inf, x[:n].copy(), r, y,
                         Basis(head.copy(), status.copy()), iters)

    def _crossed(self, lower, upper, basis, j) -> LpOutcome:
        n, m = self.n, self.m
        if basis is None or basis.head.shape[0] != m:
            basis = Basis.slack(n, m)
        return LpOutcome(LpStatus.INFEASIBLE, np.inf, np.clip(np.zeros(n), lower, upper),
                         np.zeros(n), np.zeros(m), basis, 0, crossed=j)


def solve_from_scratch(model: LpModel, lower=None, upper=None) -> LpOutcome:
    return DualSimplex(model).solve(lower, upper)


def warmstart_solve(model: LpModel, basis: Basis, lower=None, upper=None) -> LpOutcome:
    return DualSimplex(model).solve(lower, upper, basis)


def apply_bound(lower: np.ndarray, upper: np.ndarray, var: int, side: str,
                value: float) -> tuple[np.ndarray, np.ndarray]:
    """Return copies of the bound vectors with one bound tightened to ``value``."""
    lower, upper = lower.copy(), upper.copy()
    if side == "lower":
        lower[var] = max(lower[var], value)
    elif side == "upper":
        upper[var] = min(upper[var], value)
    else:
        raise LpError(f"unknown bound side {side!r}")
    return lower, upper


def hotstart_solve(model: LpModel, basis: Basis, lower: np.ndarray, upper: np.ndarray,
                   change: tuple[int, str, float], solver: DualSimplex | None = None) -> LpOutcome:
    """Resolve after moving one bound, starting from the previous optimal basis."""
    lower, upper = apply_bound(lower, upper, *change)
    return (solver or DualSimplex(model)).solve(lower, upper, basis)


def extract_dual_info(outcome: LpOutcome) -> np.ndarray:
    """Reduced costs of an optimal LP, or the sign-normalized Farkas vector."""
    if outcome.status is LpStatus.OPTIMAL or outcome.status.infeasible:
        return outcome.dual_info.copy()
    raise LpError(f"no dual information for an LP with status {outcome.status.value}")


def dual_bound(model: LpModel, lower: np.ndarray, upper: np.ndarray,
               row_duals: np.ndarray, r: np.ndarray) -> float:
    """Evaluate ``y b + sum_{r>0} r l + sum_{r<0} r u`` (may be -inf)."""
    total = float(row_duals @ model.rhs)
    pos, neg = r > 0, r < 0
    with np.errstate(invalid="ignore"):
        total += float(np.sum(r[pos] * lower[pos])) + float(np.sum(r[neg] * upper[neg]))
    return total


def farkas_gap(model: LpModel, lower: np.ndarray, upper: np.ndarray,
               row_duals: np.ndarray, r: np.ndarray) -> float:
    """``y b - max_{box} (y A) x``; positive means the certificate proves infeasibility."""
    g = -r
    pos, neg = g > 0, g < 0
    best = float(np.sum(g[pos] * upper[pos])) + float(np.sum(g[neg] * lower[neg]))
    return float(row_duals @ model.rhs) - best
