"""Run records and performance profiles for strategy comparisons."""
from __future__ import annotations

import json
import logging
import math
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable, Sequence

log = logging.getLogger(__name__)

SOLVED = ("optimal", "infeasible")
MIN_TIME = 1e-6


@dataclass(frozen=True)
class RunRecord:
    instance: str
    config: str
    fingerprint: str
    status: str
    objective: float | None
    nodes: int
    offshoots: int
    lp_iterations: int
    wall_time: float

    @property
    def solved(self) -> bool:
        return self.status in SOLVED

    def metric(self, name: str) -> float:
        if not self.solved:
            return math.inf
        if name == "time":
            return max(self.wall_time, MIN_TIME)
        if name == "nodes":
            return float(max(self.nodes, 1))
        raise ValueError(f"unknown metric {name!r}")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RunRecord":
        names = {f.name for f in fields(cls)}
        missing = names - data.keys()
        if missing:
            raise ValueError(f"run record lacks {sorted(missing)}")
        return cls(**{k: data[k] for k in names})


def record_from_result(instance: str, label: str, result) -> RunRecord:
    s = result.stats
    return RunRecord(instance, label, result.config.fingerprint(), result.status,
                     result.objective, s.nodes, s.offshoots_created, s.lp_iterations,
                     s.wall_time)


def save_records(records: Sequence[RunRecord], path: str | Path) -> None:
    Path(path).write_text(json.dumps([r.to_dict() for r in records], indent=1) + "\n")


def load_records(path: str | Path) -> list[RunRecord]:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, list):
        raise ValueError(f"{path}: expected a JSON list of run records")
    return [RunRecord.from_dict(d) for d in data]


def _table(records: Iterable[RunRecord], metric: str):
    configs: list[str] = []
    table: dict[str, dict[str, float]] = {}
    for r in records:
        if r.config not in configs:
            configs.append(r.config)
        table.setdefault(r.instance, {})[r.config] = r.metric(metric)
    return configs, table


def ratios(records: Iterable[RunRecord], metric: str = "time") -> tuple[list[str], dict[str, dict[str, float]]]:
    """Per-instance ratios to the best config; instances no config solved are dropped."""
    configs, table = _table(records, metric)
    out = {}
    for inst in sorted(table):
        row = table[inst]
        values = [row.get(c, math.inf) for c in configs]
        best = min(values)
        if not math.isfinite(best):
            log.warning("instance %s excluded: no configuration solved it", inst)
            continue
        out[inst] = {c: v / best for c, v in zip(configs, values)}
    return configs, out


@dataclass
class Profile:
    configs: list[str]
    taus: list[float]
    rho: dict[str, list[float]]
    geomean: dict[str, float]
    instances: int

    def to_csv(self) -> str:
        lines = ["tau," + ",".join(self.configs)]
        for k, tau in enumerate(self.taus):
            lines.append(",".join([f"{tau:.6g}"] + [f"{self.rho[c][k]:.6g}" for c in self.configs]))
        return "\n".join(lines) + "\n"


def performance_profile(records: Iterable[RunRecord], metric: str = "time") -> Profile:
    """Cumulative fraction of instances each config solves within factor tau of the best."""
    configs, rat = ratios(records, metric)
    if len(configs) < 2:
        raise ValueError("a profile needs at least two configurations")
    finite = sorted({v for row in rat.values() for v in row.values() if math.isfinite(v)})
    taus = finite or [1.0]
    count = len(rat)
    rho = {}
    for c in configs:
        vals = sorted(row[c] for row in rat.values())
        rho[c] = [sum(v <= tau for v in vals) / count if count else 0.0 for tau in taus]
    common = [row for row in rat.values() if all(math.isfinite(v) for v in row.values())]
    geomean = {}
    for c in configs:
        if common:
            geomean[c] = math.exp(sum(math.log(row[c]) for row in common) / len(common))
        else:
            geomean[c] = math.nan
    return Profile(configs, taus, rho, geomean, count)
