"""MILP instances: the immutable problem type, JSON and MPS readers/writers,
and a seeded generator of small random instances."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .lp import LpModel

MPS_INFINITY = 1e30


class ModelError(ValueError):
    """Invalid instance data. ``location`` is a line number or a JSON path."""

    def __init__(self, message: str, location: int | str | None = None):
        self.message = message
        self.location = location
        if isinstance(location, int):
            message = f"line {location}: {message}"
        elif location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class MpsError(ModelError):
    pass


@dataclass(frozen=True)
class Row:
    name: str
    coefs: tuple[tuple[int, float], ...]
    sense: str
    rhs: float


@dataclass(frozen=True)
class MilpProblem:
    """A MILP as written by the user.

    ``objective`` is in the stated ``sense``; :attr:`lp` is the
    minimization relaxation used by the solver (negated for ``max``).
    """

    name: str
    var_names: tuple[str, ...]
    objective: tuple[float, ...]
    rows: tuple[Row, ...]
    lower: tuple[float, ...]
    upper: tuple[float, ...]
    integral: tuple[bool, ...]
    sense: str = "min"
    objective_offset: float = 0.0
    metadata: Mapping[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        validate(self)

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def objective_sign(self) -> float:
        return -1.0 if self.sense == "max" else 1.0

    @cached_property
    def integer_indices(self) -> np.ndarray:
        return np.flatnonzero(np.asarray(self.integral, dtype=bool))

    @cached_property
    def lp(self) -> LpModel:
        lower = np.asarray(self.lower, dtype=float).copy()
        upper = np.asarray(self.upper, dtype=float).copy()
        ints = self.integer_indices
        # integer bounds are rounded inward; tolerance guards 0.9999999 style input
        lower[ints] = np.ceil(lower[ints] - 1e-9)
        upper[ints] = np.floor(upper[ints] + 1e-9)
        sign = self.objective_sign
        return LpModel.from_rows([sign * c for c in self.objective],
                                 [(dict(r.coefs), r.sense, r.rhs) for r in self.rows],
                                 lower, upper)

    @property
    def oracle_ok(self) -> bool:
        """Integer variables are box-bounded, so enumeration is possible."""
        lp = self.lp
        ints = self.integer_indices
        return bool(np.all(np.isfinite(lp.lower[ints])) and np.all(np.isfinite(lp.upper[ints])))

    def user_objective(self, min_objective: float) -> float:
        """Map an objective of :attr:`lp` back to the stated sense, offset included."""
        return self.objective_sign * min_objective + self.objective_offset

    def evaluate(self, x: Sequence[float]) -> float:
        return float(np.dot(self.objective, x)) + self.objective_offset

    def is_feasible(self, x: Sequence[float], tol: float = 1e-6) -> bool:
        x = np.asarray(x, dtype=float)
        lp = self.lp
        if np.any(x < lp.lower - tol) or np.any(x > lp.upper + tol):
            return False
        ints = self.integer_indices
        if np.any(np.abs(x[ints] - np.round(x[ints])) > tol):
            return False
        return bool(np.all(lp.A @ x >= lp.rhs - tol))


def validate(p: MilpProblem) -> None:
    n = len(p.var_names)
    if n == 0:
        raise ModelError("empty problem: no variables")
    if len(set(p.var_names)) != n:
        raise ModelError("duplicate variable names")
    for label, vec in (("objective", p.objective), ("lower", p.lower),
                       ("upper", p.upper), ("integral", p.integral)):
        if len(vec) != n:
            raise ModelError(f"{label} has {len(vec)} entries, expected {n}")
    if p.sense not in ("min", "max"):
        raise ModelError(f"sense must be 'min' or 'max', got {p.sense!r}")
    for j, c in enumerate(p.objective):
        if not math.isfinite(c):
            raise ModelError(f"non-finite objective coefficient {c}", f"objective[{j}]")
    if not math.isfinite(p.objective_offset):
        raise ModelError("non-finite objective offset")
    for j, (lo, up) in enumerate(zip(p.lower, p.upper)):
        if math.isnan(lo) or math.isnan(up):
            raise ModelError("NaN bound", f"vars[{j}]")
        if lo > up:
            raise ModelError(f"lower bound {lo} exceeds upper bound {up}", f"vars[{j}]")
        if lo == math.inf or up == -math.inf:
            raise ModelError("bound excludes every value", f"vars[{j}]")
    for i, row in enumerate(p.rows):
        if row.sense not in (">=", "<=", "="):
            raise ModelError(f"unknown sense {row.sense!r}", f"rows[{i}]")
        if not math.isfinite(row.rhs):
            raise ModelError(f"non-finite right-hand side {row.rhs}", f"rows[{i}]")
        for j, v in row.coefs:
            if not 0 <= j < n:
                raise ModelError(f"column index {j} out of range", f"rows[{i}]")
            if not math.isfinite(v):
                raise ModelError(f"non-finite coefficient {v}", f"rows[{i}]")


def make_problem(objective: Sequence[float], rows: Iterable[tuple[Mapping[int, float], str, float]],
                 lower: Sequence[float], upper: Sequence[float], integral: Sequence[bool],
                 name: str = "problem", sense: str = "min", var_names: Sequence[str] | None = None,
                 objective_offset: float = 0.0) -> MilpProblem:
    """Convenience constructor from index-keyed rows."""
    n = len(objective)
    names = tuple(var_names) if var_names is not None else tuple(f"x{j + 1}" for j in range(n))
    built = tuple(Row(f"r{i + 1}", tuple(sorted((int(j), float(v)) for j, v in coefs.items() if v != 0)),
                      sense_, float(rhs))
                  for i, (coefs, sense_, rhs) in enumerate(rows))
    return MilpProblem(name, names, tuple(float(c) for c in objective), built,
                       tuple(float(v) for v in lower), tuple(float(v) for v in upper),
                       tuple(bool(v) for v in integral), sense, float(objective_offset))


# --------------------------------------------------------------------- JSON

def _json_bound(value, default: float, where: str) -> float:
    if value is None:
        return default
    if isinstance(value, str):
        low = value.strip().lower()
        if low in ("inf", "+inf", "infinity"):
            return math.inf
        if low in ("-inf", "-infinity"):
            return -math.inf
        raise ModelError(f"bound {value!r} is not a number", where)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ModelError(f"bound {value!r} is not a number", where)
    return float(value)


def _json_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ModelError(f"{value!r} is not a number", where)
    value = float(value)
    if not math.isfinite(value):
        raise ModelError(f"non-finite value {value}", where)
    return value


def problem_from_json(data: str | bytes | Mapping[str, Any]) -> MilpProblem:
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data, parse_constant=lambda c: c)
        except json.JSONDecodeError as exc:
            raise ModelError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, Mapping):
        raise ModelError("top level must be an object")
    for key in ("objective", "rows", "vars"):
        if key not in data:
            raise ModelError(f"missing key {key!r}")
    vars_ = data["vars"]
    names = []
    lower, upper, integral = [], [], []
    for j, v in enumerate(vars_):
        where = f"vars[{j}]"
        if not isinstance(v, Mapping) or "name" not in v:
            raise ModelError("variable entry needs a name", where)
        names.append(str(v["name"]))
        lower.append(_json_bound(v.get("lb", 0.0), -math.inf, where + ".lb"))
        upper.append(_json_bound(v.get("ub"), math.inf, where + ".ub"))
        integral.append(bool(v.get("integral", False)))
    index = {name: j for j, name in enumerate(names)}
    if len(index) != len(names):
        raise ModelError("duplicate variable names", "vars")
    objective = data["objective"]
    if isinstance(objective, Mapping):
        obj = [0.0] * len(names)
        for key, val in objective.items():
            if key not in index:
                raise ModelError(f"unknown variable {key!r}", "objective")
            obj[index[key]] = _json_number(val, f"objective.{key}")
    else:
        if len(objective) != len(names):
            raise ModelError(f"{len(objective)} objective coefficients for {len(names)} variables",
                             "objective")
        obj = [_json_number(v, f"objective[{j}]") for j, v in enumerate(objective)]
    rows = []
    for i, r in enumerate(data["rows"]):
        where = f"rows[{i}]"
        if not isinstance(r, Mapping) or "coefs" not in r:
            raise ModelError("row needs coefs", where)
        coefs = {}
        for key, val in r["coefs"].items():
            if key not in index:
                raise ModelError(f"unknown variable {key!r}", where)
            coefs[index[key]] = _json_number(val, f"{where}.coefs.{key}")
        sense = str(r.get("sense", ">="))
        rhs = _json_number(r.get("rhs", 0.0), where + ".rhs")
        rows.append(Row(str(r.get("name", f"r{i + 1}")),
                        tuple(sorted((j, v) for j, v in coefs.items() if v != 0)), sense, rhs))
    sense = str(data.get("sense", "min")).lower()
    sense = {"minimize": "min", "maximize": "max"}.get(sense, sense)
    offset = _json_number(data.get("objective_offset", 0.0), "objective_offset")
    return MilpProblem(str(data.get("name", "problem")), tuple(names), tuple(obj), tuple(rows),
                       tuple(lower), tuple(upper), tuple(integral), sense, offset)


def _bound_to_json(v: float):
    return None if math.isinf(v) else v


def problem_to_json(p: MilpProblem) -> dict:
    out = {
        "name": p.name,
        "sense": p.sense,
        "objective": list(p.objective),
        "rows": [{"name": r.name, "coefs": {p.var_names[j]: v for j, v in r.coefs},
                  "sense": r.sense, "rhs": r.rhs} for r in p.rows],
        "vars": [{"name": name, "lb": _bound_to_json(lo), "ub": _bound_to_json(up),
                  "integral": flag}
                 for name, lo, up, flag in zip(p.var_names, p.lower, p.upper, p.integral)],
    }
    if p.objective_offset:
        out["objective_offset"] = p.objective_offset
    return out


def dumps_json(p: MilpProblem) -> str:
    return json.dumps(problem_to_json(p), indent=2)


# ---------------------------------------------------------------------- MPS

_SECTIONS = {"NAME", "ROWS", "COLUMNS", "RHS", "RANGES", "BOUNDS", "ENDATA", "OBJSENSE"}
_SENSES = {"G": ">=", "L": "<=", "E": "=", "N": None}


def _mps_number(token: str, lineno: int, allow_inf: bool = False) -> float:
    try:
        value = float(token)
    except ValueError:
        raise MpsError(f"expected a number, got {token!r}", lineno) from None
    if math.isnan(value):
        raise MpsError(f"NaN is not allowed ({token!r})", lineno)
    if abs(value) >= MPS_INFINITY or math.isinf(value):
        if not allow_inf:
            raise MpsError(f"infinite value {token!r} not allowed here", lineno)
        return math.copysign(math.inf, value)
    return value


def parse_mps(text: str | bytes) -> MilpProblem:
    """Parse fixed- or free-format MPS (names must not contain spaces)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    name = None
    sense = "min"
    section = None
    obj_row = None
    row_names: list[str] = []
    row_sense: dict[str, str] = {}
    free_rows: set[str] = set()
    rhs: dict[str, float] = {}
    col_index: dict[str, int] = {}
    col_entries: list[dict[str, float]] = []
    objective: list[float] = []
    integral: list[bool] = []
    in_int = False
    current_col = None
    lower: dict[int, float] = {}
    upper: dict[int, float] = {}
    offset = 0.0
    ended = False
    seen_sections: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line.strip() or line.lstrip().startswith("*"):
            continue
        if ended:
            raise MpsError("content after ENDATA", lineno)
        tokens = line.split()
        if not line[0].isspace():
            key = tokens[0].upper()
            if key not in _SECTIONS:
                raise MpsError(f"unknown section {tokens[0]!r}", lineno)
            if key in seen_sections:
                raise MpsError(f"duplicate section {key}", lineno)
            seen_sections.add(key)
            section = key
            if key == "NAME":
                name = tokens[1] if len(tokens) > 1 else ""
            elif key == "RANGES":
                raise MpsError("RANGES section is not supported", lineno)
            elif key == "ENDATA":
                ended = True
            elif key == "OBJSENSE" and len(tokens) > 1:
                sense = _objsense(tokens[1], lineno)
            continue
        if section is None:
            raise MpsError("data line before any section header", lineno)
        if section == "OBJSENSE":
            sense = _objsense(tokens[0], lineno)
        elif section == "ROWS":
            if len(tokens) != 2:
                raise MpsError("ROWS entries need a type and a name", lineno)
            kind, rname = tokens[0].upper(), tokens[1]
            if kind not in _SENSES:
                raise MpsError(f"unknown row type {tokens[0]!r}", lineno)
            if rname in row_sense or rname in free_rows or rname == obj_row:
                raise MpsError(f"duplicate row {rname!r}", lineno)
            if kind == "N":
                if obj_row is None:
                    obj_row = rname
                else:
                    free_rows.add(rname)
            else:
                row_names.append(rname)
                row_sense[rname] = _SENSES[kind]
        elif section == "COLUMNS":
            if len(tokens) >= 3 and tokens[1].strip("'\"").upper() == "MARKER":
                marker = tokens[2].strip("'\"").upper()
                if marker == "INTORG":
                    in_int = True
                elif marker == "INTEND":
                    in_int = False
                else:
                    raise MpsError(f"unknown marker {tokens[2]!r}", lineno)
                continue
            if len(tokens) not in (3, 5):
                raise MpsError("COLUMNS entries need a column and 1 or 2 (row, value) pairs", lineno)
            cname = tokens[0]
            if cname != current_col:
                if cname in col_index:
                    raise MpsError(f"duplicate column {cname!r}", lineno)
                col_index[cname] = len(col_entries)
                col_entries.append({})
                objective.append(0.0)
                integral.append(in_int)
                current_col = cname
            j = col_index[cname]
            for rname, tok in zip(tokens[1::2], tokens[2::2]):
                value = _mps_number(tok, lineno)
                if rname == obj_row:
                    objective[j] += value
                elif rname in free_rows:
                    continue
                elif rname in row_sense:
                    if rname in col_entries[j]:
                        raise MpsError(f"duplicate entry for row {rname!r} in column {cname!r}", lineno)
                    col_entries[j][rname] = value
                else:
                    raise MpsError(f"unknown row {rname!r}", lineno)
        elif section == "RHS":
            pairs = tokens[1:] if len(tokens) % 2 == 1 else tokens
            if len(pairs) not in (2, 4):
                raise MpsError("RHS entries need 1 or 2 (row, value) pairs", lineno)
            for rname, tok in zip(pairs[0::2], pairs[1::2]):
                value = _mps_number(tok, lineno)
                if rname == obj_row:
                    offset = -value
                elif rname in row_sense:
                    if rname in rhs:
                        raise MpsError(f"duplicate right-hand side for row {rname!r}", lineno)
                    rhs[rname] = value
                elif rname not in free_rows:
                    raise MpsError(f"unknown row {rname!r}", lineno)
        elif section == "BOUNDS":
            _parse_bound(tokens, lineno, col_index, lower, upper, integral)
        else:
            raise MpsError(f"unexpected data in section {section}", lineno)

    if not ended:
        raise MpsError("missing ENDATA")
    if not col_entries:
        raise MpsError("empty problem: no columns")
    n = len(col_entries)
    lo = [lower.get(j, 0.0) for j in range(n)]
    up = [upper.get(j, math.inf) for j in range(n)]
    for j in range(n):
        if j in upper and j not in lower and upper[j] < 0 and not integral[j]:
            lo[j] = -math.inf
    names = [None] * n
    for cname, j in col_index.items():
        names[j] = cname
    rows = []
    for rname in row_names:
        coefs = tuple(sorted((j, col_entries[j][rname]) for j in range(n) if rname in col_entries[j]))
        rows.append(Row(rname, coefs, row_sense[rname], rhs.get(rname, 0.0)))
    meta = {"objective_sign": -1 if sense == "max" else 1, "objective_row": obj_row}
    try:
        return MilpProblem(name or "problem", tuple(names), tuple(objective), tuple(rows),
                           tuple(lo), tuple(up), tuple(integral), sense, offset, meta)
    except ModelError as exc:
        raise MpsError(exc.message, exc.location) from None


def _objsense(token: str, lineno: int) -> str:
    key = token.upper()
    if key in ("MIN", "MINIMIZE"):
        return "min"
    if key in ("MAX", "MAXIMIZE"):
        return "max"
    raise MpsError(f"unknown objective sense {token!r}", lineno)


_VALUED = {"UP", "LO", "FX", "LI", "UI"}
_UNVALUED = {"FR", "MI", "PL", "BV"}


def _parse_bound(tokens, lineno, col_index, lower, upper, integral):
    kind = tokens[0].upper()
    if kind in _VALUED:
        if len(tokens) == 4:
            cname, tok = tokens[2], tokens[3]
        elif len(tokens) == 3:
            cname, tok = tokens[1], tokens[2]
        else:
            raise MpsError(f"{kind} bound needs a column and a value", lineno)
        value = _mps_number(tok, lineno, allow_inf=True)
    elif kind in _UNVALUED:
        if len(tokens) == 3:
            cname = tokens[2]
        elif len(tokens) == 2:
            cname = tokens[1]
        elif len(tokens) == 4 and kind == "BV":
            cname = tokens[2]
            _mps_number(tokens[3], lineno)
        else:
            raise MpsError(f"{kind} bound takes a column only", lineno)
        value = None
    else:
        raise MpsError(f"unsupported bound type {tokens[0]!r}", lineno)
    if cname not in col_index:
        raise MpsError(f"unknown column {cname!r}", lineno)
    j = col_index[cname]
    if kind in ("UP", "UI"):
        upper[j] = value
    elif kind in ("LO", "LI"):
        lower[j] = value
    elif kind == "FX":
        lower[j] = upper[j] = value
    elif kind == "FR":
        lower[j], upper[j] = -math.inf, math.inf
    elif kind == "MI":
        lower[j] = -math.inf
    elif kind == "PL":
        upper[j] = math.inf
    elif kind == "BV":
        lower[j], upper[j] = 0.0, 1.0
    if kind in ("LI", "UI", "BV"):
        integral[j] = True


def _fmt(v: float) -> str:
    return repr(float(v))


def write_mps(p: MilpProblem) -> str:
    """Free-format MPS; round-trips through :func:`parse_mps`."""
    lines = [f"NAME {p.name}"]
    if p.sense == "max":
        lines += ["OBJSENSE", "    MAX"]
    lines.append("ROWS")
    lines.append(" N obj")
    code = {">=": "G", "<=": "L", "=": "E"}
    for r in p.rows:
        lines.append(f" {code[r.sense]} {r.name}")
    lines.append("COLUMNS")
    by_col: list[list[tuple[str, float]]] = [[] for _ in p.var_names]
    for r in p.rows:
        for j, v in r.coefs:
            by_col[j].append((r.name, v))
    in_int = False
    marker = 0
    for j, cname in enumerate(p.var_names):
        if p.integral[j] != in_int:
            tag = "INTORG" if p.integral[j] else "INTEND"
            lines.append(f"    M{marker} 'MARKER' '{tag}'")
            marker += 1
            in_int = p.integral[j]
        entries = [("obj", p.objective[j])] + by_col[j] if p.objective[j] else by_col[j]
        if not entries:
            entries = [("obj", 0.0)]
        for rname, v in entries:
            lines.append(f"    {cname} {rname} {_fmt(v)}")
    if in_int:
        lines.append(f"    M{marker} 'MARKER' 'INTEND'")
    lines.append("RHS")
    if p.objective_offset:
        lines.append(f"    rhs obj {_fmt(-p.objective_offset)}")
    for r in p.rows:
        if r.rhs:
            lines.append(f"    rhs {r.name} {_fmt(r.rhs)}")
    lines.append("BOUNDS")
    for j, cname in enumerate(p.var_names):
        lo, up = p.lower[j], p.upper[j]
        if lo == -math.inf and up == math.inf:
            lines.append(f" FR bnd {cname}")
            continue
        if lo == up:
            lines.append(f" FX bnd {cname} {_fmt(lo)}")
            continue
        if lo == -math.inf:
            lines.append(f" MI bnd {cname}")
        elif lo != 0.0:
            lines.append(f" LO bnd {cname} {_fmt(lo)}")
        if up != math.inf:
            lines.append(f" UP bnd {cname} {_fmt(up)}")
        elif p.integral[j]:
            lines.append(f" PL bnd {cname}")
    lines.append("ENDATA")
    return "\n".join(lines) + "\n"


def load_problem(path: str) -> MilpProblem:
    with open(path, "rb") as fh:
        data = fh.read()
    if path.lower().endswith(".json"):
        return problem_from_json(data.decode("utf-8"))
    return parse_mps(data)


# ---------------------------------------------------------------- generator

@dataclass(frozen=True)
class RandomProfile:
    density: float = 0.6
    coef_range: tuple[int, int] = (-9, 9)
    objective_range: tuple[int, int] = (-10, 10)
    continuous: int = 0
    continuous_ub: int = 4
    equality_prob: float = 0.0


def generate_random(seed: int, n_vars: int = 6, n_rows: int = 4,
                    profile: RandomProfile | None = None) -> MilpProblem:
    """Small random instance with binary integer variables and boxed continuous ones.

    Right-hand sides are drawn inside the row activity range, so some
    instances are infeasible; that is intended.
    """
    if not 1 <= n_vars <= 12 or not 0 <= n_rows <= 10:
        raise ModelError("generator supports 1..12 variables and 0..10 rows")
    profile = profile or RandomProfile()
    rng = np.random.default_rng([seed, n_vars, n_rows])
    n_cont = min(profile.continuous, n_vars - 1) if n_vars > 1 else 0
    integral = [True] * (n_vars - n_cont) + [False] * n_cont
    lower = [0.0] * n_vars
    upper = [1.0] * (n_vars - n_cont) + [float(rng.integers(1, profile.continuous_ub + 1))
                                           for _ in range(n_cont)]
    lo, hi = profile.objective_range
    objective = [float(v) for v in rng.integers(lo, hi + 1, size=n_vars)]
    clo, chi = profile.coef_range
    rows = []
    for _ in range(n_rows):
        mask = rng.random(n_vars) < profile.density
        if not mask.any():
            mask[rng.integers(n_vars)] = True
        coefs = {}
        for j in np.flatnonzero(mask):
            v = 0
            while v == 0:
                v = int(rng.integers(clo, chi + 1))
            coefs[int(j)] = float(v)
        act_min = sum(min(v * lower[j], v * upper[j]) for j, v in coefs.items())
        act_max = sum(max(v * lower[j], v * upper[j]) for j, v in coefs.items())
        u = rng.random()
        if rng.random() < profile.equality_prob:
            sense, t = "=", u
        elif rng.random() < 0.5:
            sense, t = ">=", 0.1 + 0.6 * u
        else:
            sense, t = "<=", 0.3 + 0.6 * u
        rhs = float(math.floor(act_min + t * (act_max - act_min)))
        rows.append((coefs, sense, rhs))
    return make_problem(objective, rows, lower, upper, integral, name=f"rand-{seed}-{n_vars}x{n_rows}")


def random_corpus(count: int, seed: int = 0, max_vars: int = 12, max_rows: int = 10,
                  profile: RandomProfile | None = None) -> list[MilpProblem]:
    """Deterministic batch with sizes drawn from ``seed``."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        n = int(rng.integers(2, max_vars + 1))
        m = int(rng.integers(1, max_rows + 1))
        out.append(generate_random(seed * 100003 + k, n, m, profile))
    return out


def example1() -> MilpProblem:
    """The three-binary instance whose plain depth-first tree enumerates every leaf."""
    rows = [({0: -3, 1: -4, 2: -2}, ">=", -8),
            ({0: 3, 1: -4, 2: -2}, ">=", -5),
            ({0: -3, 1: 4, 2: -2}, ">=", -4),
            ({0: 3, 1: 4, 2: -2}, ">=", -1)]
    return make_problem([1, -2, -6], rows, [0, 0, 0], [1, 1, 1], [True] * 3, name="example1")
