"""Offshoot branch-and-bound.

An offshoot is a top node, given by a list ``F`` of bound changes, plus the
set ``D`` of changes that a dive applied below it until the dive reached a
prunable node. The search keeps a pool of offshoots that still have
unprocessed dive changes. Branching on a dive change ``c`` creates a new top
node, either below the dive (``F + (D - c) + flip(c)``) or beside the top
(``F + flip(c)``, with ``c`` moved into the parent's ``F``). Before the
first branching of an offshoot its ``D`` is trimmed.
"""
from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import branching
from .branching import DOWN, UP, PseudocostStore, StrategyChoice
from .lp import Basis, DualSimplex, LpOutcome, LpStatus, apply_bound, dual_bound
from .model import MilpProblem

log = logging.getLogger(__name__)

INT_TOL = 1e-6
PRUNE_TOL = 1e-9
AUDIT_TOL = 1e-6


class SearchError(RuntimeError):
    """Contract violation or unrecoverable LP trouble."""


@dataclass(frozen=True)
class Bound:
    var: int
    side: str  # "lower" raises the lower bound, "upper" lowers the upper bound
    value: float

    def flipped(self) -> "Bound":
        if self.side == "lower":
            return Bound(self.var, "upper", self.value - 1)
        return Bound(self.var, "lower", self.value + 1)

    def __str__(self) -> str:
        op = ">=" if self.side == "lower" else "<="
        return f"x{self.var + 1}{op}{self.value:g}"


@dataclass(eq=False)
class BoundChange:
    """One branching decision of a dive.

    ``objective`` is the LP value of the node this change created, or None
    when unknown (plunging); ``inf`` marks an infeasible node.
    """

    var: int
    side: str
    value: float
    frac: float
    objective: float | None = None
    processed: bool = False

    @property
    def bound(self) -> Bound:
        return Bound(self.var, self.side, self.value)

    def flipped(self) -> Bound:
        return self.bound.flipped()

    def __str__(self) -> str:
        return str(self.bound)


@dataclass(eq=False)
class Offshoot:
    id: int
    F: list[Bound]
    D: list[BoundChange]
    order: list[BoundChange]
    z_top: float
    top_basis: Basis | None
    dual_info: np.ndarray | None = None
    terminal: str = "infeasible"  # infeasible | cutoff | open | node
    disturbed: bool = False
    trimmed: bool = False
    stale: bool = False
    parent: int | None = None
    top_outcome: LpOutcome | None = None
    pending_keep: list[BoundChange] | None = None
    counter: int = 0

    @property
    def is_node(self) -> bool:
        return self.terminal == "node"

    def describe(self) -> str:
        f = "{" + ", ".join(map(str, self.F)) + "}"
        d = "{" + ", ".join(map(str, self.D)) + "}"
        return f"offshoot {self.id} F={f} D={d} z*={self.z_top:g}"


class OffshootPool:
    """Open offshoots and open nodes. ``best`` selects the smallest top bound
    (ties: earliest insertion); ``depth`` selects the latest insertion."""

    def __init__(self, mode: str = "best"):
        if mode not in ("best", "depth"):
            raise ValueError(f"unknown node selection {mode!r}")
        self.mode = mode
        self._items: dict[int, Offshoot] = {}
        self._counter = 0

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self):
        return iter(list(self._items.values()))

    def __contains__(self, o: Offshoot) -> bool:
        return self._items.get(o.id) is o

    def push(self, o: Offshoot) -> None:
        o.counter = self._counter
        self._counter += 1
        self._items[o.id] = o

    def remove(self, o: Offshoot) -> None:
        self._items.pop(o.id, None)

    def select(self) -> Offshoot:
        if not self._items:
            raise SearchError("select from an empty pool")
        if self.mode == "depth":
            return max(self._items.values(), key=lambda o: o.counter)
        return min(self._items.values(), key=lambda o: (o.z_top, o.counter))

    def purge(self, cutoff: float) -> list[Offshoot]:
        gone = [o for o in self._items.values() if o.z_top >= cutoff - PRUNE_TOL]
        for o in gone:
            del self._items[o.id]
        return gone


def select_offshoot(pool: OffshootPool) -> Offshoot:
    return pool.select()


@dataclass
class Incumbent:
    x: np.ndarray
    objective: float
    provenance: str


@dataclass
class SearchStats:
    lp_solves: int = 0
    lp_iterations: int = 0
    nodes: int = 0
    offshoots_created: int = 0
    open_nodes: int = 0
    trims: int = 0
    trim_removed: int = 0
    prunes_by_bound: int = 0
    prunes_infeasible: int = 0
    offshoots_purged: int = 0
    strong_lps: int = 0
    bound_lps: int = 0
    splits: int = 0
    incumbents: int = 0
    wall_time: float = 0.0


@dataclass
class Event:
    seq: int
    kind: str
    node: int | None
    offshoot: int | None
    parent: int | None
    status: str
    objective: float
    detail: str = ""

    def as_dict(self) -> dict:
        return {"seq": self.seq, "kind": self.kind, "node": self.node, "offshoot": self.offshoot,
                "parent": self.parent, "status": self.status,
                "objective": None if not math.isfinite(self.objective) else self.objective,
                "detail": self.detail}


@dataclass
class Audit:
    """Self-checks collected when ``SearchConfig.audit`` is on."""

    trim_checks: int = 0
    trim_violations: list[str] = field(default_factory=list)
    purges: list[tuple[int, float, float]] = field(default_factory=list)
    bounding: list[tuple[float, float, float]] = field(default_factory=list)
    monotone: list[tuple[float, float]] = field(default_factory=list)
    offshoots: list[dict] = field(default_factory=list)


@dataclass
class SearchConfig:
    strategy: str | Callable[[Offshoot, "OffshootSearch"], StrategyChoice] = "pseudodual"
    max_dive_depth: int | None = None
    trim: bool = True
    bounding: int = 1
    split_threshold: int | None = 64
    dive_direction: str = "round"
    dive_rule: str = "reliability"  # or "index": lowest-index fractional variable
    node_selection: str = "best"
    plunge: bool = False
    reliability: int = 5
    strong_candidates: int = 10
    time_limit: float | None = None
    node_limit: int | None = None
    audit: bool = False
    trace: bool = False

    def __post_init__(self):
        if isinstance(self.strategy, str) and self.strategy not in branching.STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.bounding not in (0, 1, 2, 3):
            raise ValueError("bounding must be 0 (off), 1, 2 or 3")
        if self.dive_direction not in ("round", "up", "down"):
            raise ValueError(f"unknown dive direction {self.dive_direction!r}")
        if self.dive_rule not in ("reliability", "index"):
            raise ValueError(f"unknown dive rule {self.dive_rule!r}")
        if self.max_dive_depth is not None and self.max_dive_depth < 0:
            raise ValueError("max_dive_depth must be >= 0")
        if self.split_threshold is not None and self.split_threshold < 1:
            raise ValueError("split_threshold must be >= 1")

    def fingerprint(self) -> str:
        strategy = self.strategy if isinstance(self.strategy, str) else "scripted"
        depth = "inf" if self.max_dive_depth is None else self.max_dive_depth
        return (f"strategy={strategy},depth={depth},trim={'on' if self.trim else 'off'},"
                f"bounding={self.bounding or 'off'},split={self.split_threshold},"
                f"dir={self.dive_direction},rule={self.dive_rule},sel={self.node_selection},"
                f"plunge={'on' if self.plunge else 'off'}")


@dataclass
class PruneReport:
    updated: bool
    purged: list[int] = field(default_factory=list)
    marked: int = 0
    rejected: str | None = None


@dataclass
class TrimReport:
    method: str | None
    removed_dedup: int = 0
    removed_dual: int = 0
    removed_bottom: int = 0

    @property
    def removed(self) -> int:
        return self.removed_dedup + (self.removed_bottom if self.method == "bottom"
                                     else self.removed_dual)


@dataclass
class SolveResult:
    status: str  # optimal | infeasible | limit | unbounded
    objective: float | None
    x: np.ndarray | None
    stats: SearchStats
    events: list[Event]
    audit: Audit
    config: SearchConfig


@dataclass
class _Terminal:
    kind: str  # infeasible | cutoff | open
    outcome: LpOutcome


class _Limit(Exception):
    pass


class OffshootSearch:
    def __init__(self, problem: MilpProblem, config: SearchConfig | None = None):
        self.problem = problem
        self.config = config or SearchConfig()
        self.lp = problem.lp
        self.solver = DualSimplex(self.lp)
        self.is_int = np.zeros(self.lp.num_vars, dtype=bool)
        self.is_int[problem.integer_indices] = True
        self.cutoff = math.inf
        self.incumbent: Incumbent | None = None
        self.pool = OffshootPool(self.config.node_selection)
        self.store = PseudocostStore(self.lp.num_vars, self.config.reliability)
        self.stats = SearchStats()
        self.events: list[Event] = []
        self.audit = Audit()
        self._ids = 0
        self._dive_iters = 0
        self._dive_lps = 0
        self._t0 = time.perf_counter()

    # ------------------------------------------------------------ helpers

    def bounds(self, F: Sequence[Bound]) -> tuple[np.ndarray, np.ndarray]:
        lower, upper = self.lp.lower.copy(), self.lp.upper.copy()
        for b in F:
            if b.side == "lower":
                lower[b.var] = max(lower[b.var], b.value)
            else:
                upper[b.var] = min(upper[b.var], b.value)
        return lower, upper

    def prunable(self, out: LpOutcome) -> bool:
        return out.infeasible or out.objective >= self.cutoff - PRUNE_TOL

    def fractional(self, x: np.ndarray) -> list[int]:
        gap = np.abs(x - np.round(x))
        return [int(j) for j in np.flatnonzero(self.is_int & (gap > INT_TOL))]

    def _new_id(self) -> int:
        self._ids += 1
        return self._ids - 1

    def _solve_lp(self, lower, upper, basis, kind, *, offshoot=None, parent=None, detail="",
                  node=True, max_iter=None) -> LpOutcome:
        out = self.solver.solve(lower, upper, basis, max_iter)
        self.stats.lp_solves += 1
        self.stats.lp_iterations += out.iterations
        node_id = None
        if node:
            self.stats.nodes += 1
            node_id = self.stats.nodes
        if self.config.trace or self.config.audit or node:
            self.events.append(Event(len(self.events), kind, node_id, offshoot, parent,
                                     out.status.value, out.objective, detail))
        if node and out.status is LpStatus.ITERATION_LIMIT:
            raise SearchError(f"LP iteration limit at node {node_id} ({kind} {detail}); "
                              "numerical trouble")
        if node and out.status is LpStatus.UNBOUNDED and node_id != 1:
            raise SearchError(f"unbounded LP below the root at node {node_id}")
        return out

    def _check_limits(self) -> None:
        cfg = self.config
        if cfg.node_limit is not None and self.stats.nodes >= cfg.node_limit:
            raise _Limit()
        if cfg.time_limit is not None and time.perf_counter() - self._t0 >= cfg.time_limit:
            raise _Limit()

    # -------------------------------------------------------- incumbent

    def update_cutoff(self, x: np.ndarray, objective: float, provenance: str = "") -> PruneReport:
        """Register an integral point; purge offshoots whose top bound reaches the cutoff."""
        x = np.asarray(x, dtype=float).copy()
        snapped = x.copy()
        snapped[self.is_int] = np.round(snapped[self.is_int])
        if self.problem.is_feasible(snapped):
            x = snapped
            objective = float(self.lp.objective @ x)
        elif not self.problem.is_feasible(x):
            msg = f"rejected infeasible candidate from {provenance or 'caller'}"
            log.warning(msg)
            return PruneReport(False, rejected=msg)
        if objective >= self.cutoff - PRUNE_TOL:
            return PruneReport(False)
        self.cutoff = objective
        self.incumbent = Incumbent(x, objective, provenance)
        self.stats.incumbents += 1
        gone = self.pool.purge(self.cutoff)
        for o in gone:
            self.audit.purges.append((o.id, o.z_top, self.cutoff))
        self.stats.offshoots_purged += len(gone)
        marked = 0
        for o in self.pool:
            if o.D and not o.disturbed and self.config.trim:
                keep = self._bottom_keep(o, o.D, self.cutoff)
                if keep is not None and len(keep) < len(o.D):
                    o.pending_keep = keep
                    marked += len(o.D) - len(keep)
        return PruneReport(True, [o.id for o in gone], marked)

    # ------------------------------------------------------------ diving

    def _strong_branch(self, lower, upper, basis, parent_id):
        def run(var: int, direction: int, cap: int) -> LpOutcome:
            side = "upper" if direction == DOWN else "lower"
            value = math.floor(self._cur_x[var]) if direction == DOWN else math.ceil(self._cur_x[var])
            lo, up = apply_bound(lower, upper, var, side, value)
            self.stats.strong_lps += 1
            return self._solve_lp(lo, up, basis, "strong", parent=parent_id,
                                  detail=str(Bound(var, side, value)), node=False, max_iter=cap)
        return run

    def _choose_dive_variable(self, out: LpOutcome, lower, upper, frac: list[int], parent_id):
        cfg = self.config
        if cfg.dive_rule == "index":
            j = frac[0]
            return j, branching.rounding_direction(out.primal[j], cfg.dive_direction)
        avg = self._dive_iters / self._dive_lps if self._dive_lps else 0.0
        cap = max(50, int(2 * avg))
        self._cur_x = out.primal
        choice = branching.select_dive_variable(
            out.primal, out.objective, frac, self.store,
            self._strong_branch(lower, upper, out.basis, parent_id),
            cfg.dive_direction, cap, cfg.strong_candidates)
        return choice.var, choice.direction

    def dive(self, lower: np.ndarray, upper: np.ndarray, start: LpOutcome,
             limit: int | None = None, min_steps: int = 0, offshoot_id: int | None = None
             ) -> tuple[list[BoundChange], _Terminal]:
        """Dive from an optimal node until it is prunable or ``limit`` changes were made."""
        changes: list[BoundChange] = []
        cur = start
        while True:
            if cur.infeasible:
                return changes, _Terminal("infeasible", cur)
            if cur.objective >= self.cutoff - PRUNE_TOL:
                return changes, _Terminal("cutoff", cur)
            frac = self.fractional(cur.primal)
            if not frac:
                self.update_cutoff(cur.primal, cur.objective, f"dive of offshoot {offshoot_id}")
                return changes, _Terminal("cutoff", cur)
            if limit is not None and len(changes) >= max(limit, min_steps):
                return changes, _Terminal("open", cur)
            self._check_limits()
            var, direction = self._choose_dive_variable(cur, lower, upper, frac, offshoot_id)
            value = cur.primal[var]
            if direction == DOWN:
                change = BoundChange(var, "upper", float(math.floor(value)), float(value))
            else:
                change = BoundChange(var, "lower", float(math.ceil(value)), float(value))
            lower, upper = apply_bound(lower, upper, var, change.side, change.value)
            child = self._solve_lp(lower, upper, cur.basis, "dive", offshoot=offshoot_id,
                                   detail=str(change))
            self._dive_iters += child.iterations
            self._dive_lps += 1
            if child.optimal:
                down, up = branching.fractional_distances(value)
                self.store.update(var, direction, child.objective - cur.objective,
                                  down if direction == DOWN else up)
            change.objective = child.objective if child.optimal else math.inf
            changes.append(change)
            cur = child

    def plunge(self, lower: np.ndarray, upper: np.ndarray, start: LpOutcome,
               offshoot_id: int | None = None) -> tuple[list[BoundChange], _Terminal]:
        """Fix every integer variable to its rounded LP value and solve once."""
        changes = []
        for j in np.flatnonzero(self.is_int):
            if lower[j] == upper[j]:
                continue
            value = float(min(max(round(start.primal[j]), lower[j]), upper[j]))
            if value > lower[j]:
                changes.append(BoundChange(int(j), "lower", value, float(start.primal[j])))
            if value < upper[j]:
                changes.append(BoundChange(int(j), "upper", value, float(start.primal[j])))
        if not changes:
            return changes, _Terminal("cutoff" if not start.infeasible else "infeasible", start)
        lo, up = lower.copy(), upper.copy()
        for c in changes:
            lo, up = apply_bound(lo, up, c.var, c.side, c.value)
        out = self._solve_lp(lo, up, start.basis, "plunge", offshoot=offshoot_id,
                             detail=" ".join(map(str, changes)))
        changes[-1].objective = out.objective if out.optimal else math.inf
        if out.infeasible:
            return changes, _Terminal("infeasible", out)
        if out.objective < self.cutoff - PRUNE_TOL:
            self.update_cutoff(out.primal, out.objective, f"plunge of offshoot {offshoot_id}")
        return changes, _Terminal("cutoff", out)

    # ---------------------------------------------------- offshoot growth

    def _process_top(self, F: list[Bound], out: LpOutcome, parent: int | None) -> Offshoot | None:
        if out.infeasible:
            self.stats.prunes_infeasible += 1
            return None
        if out.objective >= self.cutoff - PRUNE_TOL:
            self.stats.prunes_by_bound += 1
            return None
        if not self.fractional(out.primal):
            self.update_cutoff(out.primal, out.objective, f"top node below offshoot {parent}")
            return None
        return self._grow(F, out, parent, min_steps=0)

    def _grow(self, F: list[Bound], out: LpOutcome, parent: int | None,
              min_steps: int) -> Offshoot | None:
        cfg = self.config
        lower, upper = self.bounds(F)
        oid = self._new_id()
        if cfg.plunge and cfg.max_dive_depth is None:
            changes, term = self.plunge(lower, upper, out, oid)
        else:
            changes, term = self.dive(lower, upper, out, cfg.max_dive_depth, min_steps, oid)
        if not changes:
            if term.kind == "open":
                self._push_node(F, out, parent, oid)
            return None
        o = Offshoot(oid, list(F), list(changes), list(changes), out.objective, out.basis,
                     None if term.kind == "open" else term.outcome.dual_info.copy(),
                     term.kind, parent=parent)
        if term.outcome.crossed is not None:
            o.dual_info = None
        self.stats.offshoots_created += 1
        if cfg.audit:
            self.audit.offshoots.append({
                "F": list(F), "D": [c.bound for c in changes], "terminal": term.kind,
                "cutoff": self.cutoff, "objective": term.outcome.objective})
        if term.kind == "open":
            self._push_node(F + [c.bound for c in changes], term.outcome, oid, self._new_id())
        for piece in self._split_all(o):
            self.pool.push(piece)
        return o

    def _push_node(self, F, out: LpOutcome, parent, oid) -> None:
        node = Offshoot(oid, list(F), [], [], out.objective, out.basis, None, "node",
                        parent=parent, top_outcome=out)
        self.stats.open_nodes += 1
        self.pool.push(node)

    def _split_all(self, o: Offshoot) -> list[Offshoot]:
        t = self.config.split_threshold
        if t is None or len(o.D) <= t:
            return [o]
        top, bottom = self.split_offshoot(o, len(o.D) // 2)
        if bottom is None:
            return self._split_all(top)
        return self._split_all(top) + self._split_all(bottom)

    def split_offshoot(self, o: Offshoot, k: int) -> tuple[Offshoot, Offshoot | None]:
        """Cut an undisturbed offshoot after its ``k``-th dive change.

        The top piece ends in an unpruned node, which is the top node of the
        bottom piece; the bottom top node LP is re-solved for its bound. When
        that node turns out prunable (possible after plunging, whose
        intermediate nodes were never solved) the top piece takes it as its
        terminal and there is no bottom piece.
        """
        if o.disturbed or len(o.D) != len(o.order):
            raise SearchError(f"offshoot {o.id} is disturbed and cannot be split")
        if not 0 < k < len(o.D):
            raise SearchError(f"split point {k} outside 1..{len(o.D) - 1}")
        head, tail = o.order[:k], o.order[k:]
        top = Offshoot(o.id, list(o.F), list(head), list(head), o.z_top, o.top_basis, None,
                       "open", parent=o.parent)
        F_b = o.F + [c.bound for c in head]
        lower, upper = self.bounds(F_b)
        bid = self._new_id()
        res = self._solve_lp(lower, upper, o.top_basis, "split", offshoot=bid, node=False,
                             detail=f"split of offshoot {o.id} at {k}")
        self.stats.splits += 1
        if self.prunable(res):
            if res.status not in (LpStatus.OPTIMAL, LpStatus.INFEASIBLE, LpStatus.DUAL_UNBOUNDED):
                raise SearchError(f"split node of offshoot {o.id} unresolved ({res.status.value})")
            top.terminal = "infeasible" if res.infeasible else "cutoff"
            top.dual_info = None if res.crossed is not None else res.dual_info.copy()
            for c in tail:
                c.processed = True
            return top, None
        if not res.optimal:
            raise SearchError(f"split node of offshoot {o.id} unresolved ({res.status.value})")
        bottom = Offshoot(bid, F_b, list(tail), list(tail), res.objective, res.basis,
                          o.dual_info, o.terminal, parent=o.id)
        self.stats.offshoots_created += 1
        return top, bottom

    # --------------------------------------------------------- trimming

    def _bottom_keep(self, o: Offshoot, D: list[BoundChange], cutoff: float) -> list[BoundChange] | None:
        """Prefix of ``D`` that already ends in a node with objective >= cutoff."""
        if o.disturbed or not D or not math.isfinite(cutoff):
            return None
        try:
            start = next(i for i, c in enumerate(o.order) if c is D[0])
        except StopIteration:
            return None
        if o.order[start:start + len(D)] != D:
            return None
        for i, c in enumerate(D):
            if c.objective is not None and c.objective >= cutoff - PRUNE_TOL:
                return D[:i + 1]
        return list(D)

    @staticmethod
    def _dedup(F: list[Bound], D: list[BoundChange]) -> list[BoundChange]:
        tight: dict[tuple[int, str], float] = {}
        for b in list(F) + [c.bound for c in D]:
            key = (b.var, b.side)
            cur = tight.get(key)
            if cur is None or (b.value > cur if b.side == "lower" else b.value < cur):
                tight[key] = b.value
        kept, seen = [], set()
        for c in D:
            key = (c.var, c.side)
            if c.value != tight[key] or key in seen:
                continue
            if any(b.var == c.var and b.side == c.side and b.value == c.value for b in F):
                continue
            seen.add(key)
            kept.append(c)
        return kept

    def trim(self, o: Offshoot, cutoff: float) -> TrimReport:
        """Reduce ``o.D`` by the dual rule or by bottom pruning, whichever removes more."""
        base = list(o.D)
        deduped = self._dedup(o.F, base)
        n_dedup = len(base) - len(deduped)
        dual_keep = deduped
        r = o.dual_info
        if r is not None and o.terminal in ("infeasible", "cutoff"):
            dual_keep = [c for c in deduped
                         if not ((c.side == "upper" and r[c.var] >= 0)
                                 or (c.side == "lower" and r[c.var] <= 0))]
        bottom = self._bottom_keep(o, base, cutoff)
        bottom_keep = self._dedup(o.F, bottom) if bottom is not None else deduped
        n_dual = len(deduped) - len(dual_keep)
        n_bottom = len(base) - len(bottom_keep) - (n_dedup if bottom is None else 0)
        report = TrimReport(None, n_dedup, n_dual, max(n_bottom, 0))
        if len(dual_keep) <= len(bottom_keep) and len(dual_keep) < len(base):
            report.method = "dual"
            o.D = dual_keep
            o.disturbed = True
        elif len(bottom_keep) < len(base):
            report.method = "bottom"
            if bottom is not None and len(bottom) < len(base):
                o.terminal = "cutoff"
            o.D = bottom_keep
            if len(bottom_keep) != len(bottom or base):
                o.disturbed = True
        for c in base:
            if c not in o.D:
                c.processed = True
        return report

    def _prepare(self, o: Offshoot) -> None:
        if not self.config.trim:
            return
        before = len(o.D)
        if not o.trimmed:
            o.trimmed = True
            o.pending_keep = None
            self.trim(o, self.cutoff)
        elif o.pending_keep is not None:
            if not o.disturbed and all(c in o.D for c in o.pending_keep):
                o.D = [c for c in o.D if c in o.pending_keep]
                o.terminal = "cutoff"
            o.pending_keep = None
        removed = before - len(o.D)
        if removed:
            self.stats.trims += 1
            self.stats.trim_removed += removed
            if self.config.audit:
                self._audit_trim(o)

    def _audit_trim(self, o: Offshoot) -> None:
        if o.terminal not in ("infeasible", "cutoff"):
            return
        lower, upper = self.bounds(o.F + [c.bound for c in o.D])
        out = self.solver.solve(lower, upper, o.top_basis)
        self.audit.trim_checks += 1
        if not (out.infeasible or out.objective >= self.cutoff - AUDIT_TOL):
            self.audit.trim_violations.append(
                f"{o.describe()} re-solves to {out.status.value} {out.objective:g} "
                f"with cutoff {self.cutoff:g}")

    # -------------------------------------------------------- branching

    def branch_bottom(self, parent: Offshoot, choice: BoundChange) -> list[Bound]:
        self._check_choice(parent, choice)
        rest = [c for c in parent.D if c is not choice]
        F_new = parent.F + [c.bound for c in rest] + [choice.flipped()]
        if choice is not parent.D[-1]:
            parent.disturbed = True
        choice.processed = True
        parent.D = rest
        return F_new

    def branch_top(self, parent: Offshoot, choice: BoundChange) -> list[Bound]:
        self._check_choice(parent, choice)
        F_new = parent.F + [choice.flipped()]
        if choice is not parent.D[0]:
            parent.disturbed = True
        choice.processed = True
        parent.F = parent.F + [choice.bound]
        parent.D = [c for c in parent.D if c is not choice]
        parent.stale = True
        return F_new

    @staticmethod
    def _check_choice(parent: Offshoot, choice: BoundChange) -> None:
        if choice.processed or not any(c is choice for c in parent.D):
            raise SearchError(f"{choice} is not an unprocessed dive change of offshoot {parent.id}")

    def strengthen_top_bound(self, parent: Offshoot, child: LpOutcome, choice: BoundChange,
                             method: int) -> float:
        """Raise ``parent.z_top`` after a top branching; returns the new value."""
        if not child.optimal:
            return parent.z_top
        lower, upper = self.bounds(parent.F)
        if method == 1:
            bound = self._reduced_cost_bound(child, choice.var, lower, upper)
        elif method == 2:
            bound = dual_bound(self.lp, lower, upper, child.row_duals, child.dual_info)
        elif method == 3:
            self.stats.bound_lps += 1
            res = self._solve_lp(lower, upper, child.basis, "bound", offshoot=parent.id,
                                 node=False, detail=f"top of offshoot {parent.id}")
            if res.status is LpStatus.ITERATION_LIMIT:
                return parent.z_top
            bound = res.objective
            if res.optimal:
                parent.top_basis = res.basis
                parent.stale = False
        else:
            raise ValueError(f"unknown bounding method {method}")
        if math.isnan(bound):
            return parent.z_top
        parent.z_top = max(parent.z_top, bound)
        return parent.z_top

    @staticmethod
    def _reduced_cost_bound(child: LpOutcome, var: int, lower, upper) -> float:
        d = float(child.dual_info[var])
        if d == 0.0:
            return child.objective
        t0 = float(child.primal[var])
        t = lower[var] if d > 0 else upper[var]
        if not math.isfinite(t):
            return -math.inf
        return child.objective + d * (t - t0)

    def _bounding_audit(self, parent: Offshoot, child: LpOutcome, choice: BoundChange) -> None:
        if not child.optimal:
            return
        lower, upper = self.bounds(parent.F)
        m1 = self._reduced_cost_bound(child, choice.var, lower, upper)
        m2 = dual_bound(self.lp, lower, upper, child.row_duals, child.dual_info)
        exact = self.solver.solve(lower, upper, child.basis)
        m3 = exact.objective if exact.optimal else math.inf
        if exact.optimal or exact.infeasible:
            self.audit.bounding.append((m1, m2, m3))

    # ------------------------------------------------------------- main

    def _choose(self, o: Offshoot) -> StrategyChoice:
        s = self.config.strategy
        if callable(s):
            return s(o, self)
        return branching.select_offshoot_variable(o, s, self.store)

    def _step(self) -> None:
        item = self.pool.select()
        if item.is_node:
            self.pool.remove(item)
            self._grow(item.F, item.top_outcome, item.parent, min_steps=1)
            return
        self._prepare(item)
        if not item.D:
            self.pool.remove(item)
            return
        choice = self._choose(item)
        if choice.side == "bottom":
            F_new = self.branch_bottom(item, choice.change)
        else:
            F_new = self.branch_top(item, choice.change)
        if not item.D:
            self.pool.remove(item)
        lower, upper = self.bounds(F_new)
        z_parent = item.z_top
        out = self._solve_lp(lower, upper, item.top_basis, "top", parent=item.id,
                             detail="{" + ", ".join(map(str, F_new)) + "}")
        if self.config.audit and out.optimal and choice.side == "bottom":
            self.audit.monotone.append((z_parent, out.objective))
        if choice.side == "top" and item in self.pool:
            if self.config.audit:
                self._bounding_audit(item, out, choice.change)
            if self.config.bounding:
                self.strengthen_top_bound(item, out, choice.change, self.config.bounding)
                if item.z_top >= self.cutoff - PRUNE_TOL:
                    self.pool.remove(item)
                    self.audit.purges.append((item.id, item.z_top, self.cutoff))
        self._process_top(F_new, out, item.id)

    def solve(self) -> SolveResult:
        self._t0 = time.perf_counter()
        status = None
        try:
            root = self._solve_lp(self.lp.lower, self.lp.upper, None, "root", detail="{}")
            if root.status is LpStatus.UNBOUNDED:
                status = "unbounded"
            else:
                self._process_top([], root, None)
                while self.pool:
                    self._check_limits()
                    self._step()
        except _Limit:
            status = "limit"
        if status is None:
            status = "optimal" if self.incumbent is not None else "infeasible"
        self.stats.wall_time = time.perf_counter() - self._t0
        objective = x = None
        if self.incumbent is not None:
            objective = self.problem.user_objective(self.incumbent.objective)
            x = self.incumbent.x
        return SolveResult(status, objective, x, self.stats, self.events, self.audit, self.config)


def solve(problem: MilpProblem, config: SearchConfig | None = None, **overrides) -> SolveResult:
    if config is None:
        config = SearchConfig(**overrides)
    elif overrides:
        raise TypeError("pass either a config or keyword overrides, not both")
    return OffshootSearch(problem, config).solve()


def scripted_strategy(var_order: Sequence[int], side: str = "bottom"):
    """Offshoot-variable rule that takes the first variable of ``var_order`` present in D."""
    rank = {v: i for i, v in enumerate(var_order)}

    def choose(o: Offshoot, search: OffshootSearch) -> StrategyChoice:
        c = min(o.D, key=lambda c: (rank.get(c.var, len(rank)), c.var))
        return StrategyChoice(c, side, "scripted")
    return choose
