"""Variable selection: reliability pseudocost branching for dives, and the
four rules that pick which dive change of an offshoot to branch on."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .lp import LpOutcome

DOWN, UP = 0, 1
SCORE_EPS = 1e-6
STRATEGIES = ("bottom", "top", "pseudo", "pseudodual")


def _tie(a: float, b: float) -> bool:
    return abs(a - b) <= 1e-9 * max(1.0, abs(a), abs(b))


class PseudocostStore:
    """Per-unit objective degradation per variable and direction."""

    def __init__(self, num_vars: int, reliability: int = 5):
        self.reliability = reliability
        self.sums = np.zeros((num_vars, 2))
        self.counts = np.zeros((num_vars, 2), dtype=int)

    def update(self, var: int, direction: int, degradation: float, distance: float) -> bool:
        """Record one observation; returns False when the distance guard skips it."""
        if distance <= 1e-9:
            return False
        self.sums[var, direction] += max(degradation, 0.0) / distance
        self.counts[var, direction] += 1
        return True

    def unit(self, var: int, direction: int) -> float:
        count = self.counts[var, direction]
        if count:
            return self.sums[var, direction] / count
        seen = self.counts[:, direction] > 0
        if seen.any():
            return float(self.sums[seen, direction].sum() / self.counts[seen, direction].sum())
        return 1.0

    def reliable(self, var: int) -> bool:
        return bool(self.counts[var].min() >= self.reliability)

    def score(self, var: int, value: float) -> float:
        down, up = fractional_distances(value)
        return (max(self.unit(var, DOWN) * down, SCORE_EPS)
                * max(self.unit(var, UP) * up, SCORE_EPS))


def fractional_distances(value: float) -> tuple[float, float]:
    """Distances to the next integer below and above; integral values count as 0.5."""
    f = value - math.floor(value)
    if f <= 1e-6 or f >= 1 - 1e-6:
        return 0.5, 0.5
    return f, 1.0 - f


def product_score(down_gain: float, up_gain: float) -> float:
    return max(down_gain, SCORE_EPS) * max(up_gain, SCORE_EPS)


def rounding_direction(value: float, mode: str) -> int:
    if mode == "up":
        return UP
    if mode == "down":
        return DOWN
    # a fraction within noise of one half counts as a tie and rounds up
    return DOWN if value - math.floor(value) < 0.5 - 1e-9 else UP


@dataclass
class DiveChoice:
    var: int
    direction: int
    reason: str = "score"
    strong_lps: int = 0


StrongBranch = Callable[[int, int, int], LpOutcome]


def select_dive_variable(primal: np.ndarray, objective: float, candidates: Sequence[int],
                         store: PseudocostStore, strong_branch: StrongBranch | None,
                         direction_mode: str = "round", iteration_cap: int = 50,
                         max_candidates: int = 10) -> DiveChoice:
    """Reliability branching over the fractional integer variables ``candidates``.

    Unreliable candidates are strong-branched (two capped LPs) and the results
    feed the pseudocost store. A strong branch that finds one side infeasible
    ends the search: that variable is returned with the feasible direction.
    """
    if not candidates:
        raise ValueError("no fractional candidates")
    if len(candidates) == 1:
        j = int(candidates[0])
        return DiveChoice(j, rounding_direction(primal[j], direction_mode), "single")
    ordered = sorted(candidates, key=lambda j: (abs(primal[j] - math.floor(primal[j]) - 0.5), j))
    ordered = sorted(ordered[:max_candidates])
    best_j, best_score = None, -1.0
    lps = 0
    for j in ordered:
        value = primal[j]
        down, up = fractional_distances(value)
        if store.reliable(j) or strong_branch is None:
            score = store.score(j, value)
        else:
            gains = []
            infeasible = []
            for direction, dist in ((DOWN, down), (UP, up)):
                out = strong_branch(j, direction, iteration_cap)
                lps += 1
                if out.infeasible:
                    infeasible.append(direction)
                    gains.append(math.inf)
                    continue
                gain = out.objective - objective
                store.update(j, direction, gain, dist)
                gains.append(max(gain, 0.0))
            if len(infeasible) == 1:
                feasible_side = UP if infeasible[0] == DOWN else DOWN
                return DiveChoice(j, feasible_side, "domain-reduction", lps)
            if len(infeasible) == 2:
                return DiveChoice(j, rounding_direction(value, direction_mode), "infeasible", lps)
            score = product_score(*gains)
        if best_j is None or (score > best_score and not _tie(score, best_score)):
            best_j, best_score = j, score
    return DiveChoice(best_j, rounding_direction(primal[best_j], direction_mode), "score", lps)


@dataclass
class StrategyChoice:
    change: object
    side: str  # "top" or "bottom"
    rule: str = field(default="")


def _argbest(items, key, prefer_max: bool):
    best, best_val = None, None
    for item in items:
        val = key(item)
        if best is None:
            best, best_val = item, val
            continue
        better = val > best_val if prefer_max else val < best_val
        if better and not _tie(val, best_val):
            best, best_val = item, val
        elif _tie(val, best_val) and item.var < best.var:
            best, best_val = item, val
    return best


def select_offshoot_variable(offshoot, strategy: str, store: PseudocostStore) -> StrategyChoice:
    """Pick the dive change of ``offshoot`` to branch on and the branching side.

    ``offshoot.D`` holds the unprocessed changes in chronological order.
    """
    D = offshoot.D
    if not D:
        raise ValueError("offshoot has no unprocessed dive changes")
    if strategy == "bottom":
        return StrategyChoice(D[-1], "bottom", strategy)
    if strategy == "top":
        return StrategyChoice(D[0], "top", strategy)
    if strategy not in ("pseudo", "pseudodual"):
        raise ValueError(f"unknown strategy {strategy!r}")
    reliable = [c for c in D if store.reliable(c.var)]
    if reliable:
        best = _argbest(reliable, lambda c: store.score(c.var, c.frac), prefer_max=True)
        return StrategyChoice(best, "top", strategy)
    r = getattr(offshoot, "dual_info", None)
    if strategy == "pseudodual" and r is not None:
        worst = _argbest(D, lambda c: abs(float(r[c.var])), prefer_max=False)
        return StrategyChoice(worst, "bottom", strategy)
    worst = _argbest(D, lambda c: store.score(c.var, c.frac), prefer_max=False)
    return StrategyChoice(worst, "bottom", strategy)
