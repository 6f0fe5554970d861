"""Command line: ``offshoot solve`` and ``offshoot compare``."""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from pathlib import Path

from .model import ModelError, generate_random, load_problem, random_corpus
from .oracle import OracleRefused, enumerate_optimum
from .profiles import RunRecord, load_records, performance_profile, record_from_result, save_records
from .search import SearchConfig, SearchError, solve

EXIT_OPTIMAL, EXIT_ERROR, EXIT_INFEASIBLE, EXIT_LIMIT, EXIT_UNBOUNDED = 0, 1, 10, 11, 12
STATUS_EXIT = {"optimal": EXIT_OPTIMAL, "infeasible": EXIT_INFEASIBLE,
               "limit": EXIT_LIMIT, "unbounded": EXIT_UNBOUNDED}

# short keys accepted in --config specs, mapped to SearchConfig fields
CONFIG_KEYS = {"strategy": "strategy", "depth": "max_dive_depth", "max_dive_depth": "max_dive_depth",
               "trim": "trim", "bounding": "bounding", "split": "split_threshold",
               "split_threshold": "split_threshold", "dir": "dive_direction",
               "dive_direction": "dive_direction", "plunge": "plunge", "rule": "dive_rule",
               "sel": "node_selection"}

DEFAULT_CONFIGS = ["strategy=bottom", "strategy=top", "strategy=pseudo", "strategy=pseudodual",
                   "bb:strategy=pseudodual,depth=0"]


def _depth(text: str) -> int | None:
    if text in ("inf", "none", "unlimited"):
        return None
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("depth must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _size(text: str) -> tuple[int, int]:
    try:
        n, m = (int(t) for t in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected VARSxROWS, got {text!r}") from None
    return n, m


def _on_off(text: str) -> bool:
    if text not in ("on", "off"):
        raise ValueError(text)
    return text == "on"


def parse_config_spec(spec: str) -> tuple[str, SearchConfig]:
    """``[label:]key=value,...`` into a label and a config."""
    label, _, body = spec.rpartition(":")
    label = label or spec
    kwargs = {}
    for item in filter(None, body.split(",")):
        key, sep, value = item.partition("=")
        if not sep or key not in CONFIG_KEYS:
            raise ValueError(f"bad config item {item!r} in {spec!r}")
        field = CONFIG_KEYS[key]
        if field == "max_dive_depth":
            kwargs[field] = _depth(value)
        elif field == "split_threshold":
            kwargs[field] = None if value in ("off", "none") else int(value)
        elif field in ("trim", "plunge"):
            kwargs[field] = _on_off(value)
        elif field == "bounding":
            kwargs[field] = 0 if value == "off" else int(value)
        else:
            kwargs[field] = value
    return label, SearchConfig(**kwargs)


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--strategy", choices=["bottom", "top", "pseudo", "pseudodual"], default="pseudodual")
    p.add_argument("--max-dive-depth", type=_depth, default=None, metavar="N",
                   help="bound changes per dive (default unlimited; 0 is plain branch-and-bound)")
    p.add_argument("--trim", choices=["on", "off"], default="on")
    p.add_argument("--bounding", choices=["off", "1", "2", "3"], default="1")
    p.add_argument("--split-threshold", type=_positive, default=64, metavar="N")
    p.add_argument("--dive-direction", choices=["round", "up", "down"], default="round")
    p.add_argument("--plunge", action="store_true", help="fix all integers at once in unlimited dives")
    p.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    p.add_argument("--node-limit", type=_positive, default=None, metavar="N")


def _config(args, **extra) -> SearchConfig:
    return SearchConfig(strategy=args.strategy, max_dive_depth=args.max_dive_depth,
                        trim=args.trim == "on",
                        bounding=0 if args.bounding == "off" else int(args.bounding),
                        split_threshold=args.split_threshold, dive_direction=args.dive_direction,
                        plunge=args.plunge, time_limit=args.time_limit,
                        node_limit=args.node_limit, **extra)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="offshoot", description="Offshoot branch-and-bound MILP solver")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve one instance (.mps or .json)")
    s.add_argument("instance", nargs="?", help="instance file")
    s.add_argument("--random", type=_size, metavar="VARSxROWS",
                   help="solve a generated instance instead of a file")
    s.add_argument("--seed", type=int, default=0, help="generator seed for --random")
    _add_search_flags(s)
    s.add_argument("--trace", metavar="PATH", help="write the LP event log as JSON lines")
    s.add_argument("--record", metavar="PATH", help="write the run record as JSON")
    s.add_argument("--check", action="store_true", help="compare against brute-force enumeration")

    c = sub.add_parser("compare", help="run a configuration matrix and build performance profiles")
    c.add_argument("instances", nargs="*", help="instance files")
    c.add_argument("--random", type=int, default=0, metavar="N", help="add N generated instances")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--config", action="append", metavar="SPEC",
                   help="[label:]key=value,... (repeatable); keys: " + ", ".join(sorted(CONFIG_KEYS)))
    c.add_argument("--metric", choices=["time", "nodes"], default="time")
    c.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    c.add_argument("--from-records", metavar="PATH", help="rebuild profiles from saved run records")
    c.add_argument("--records", metavar="PATH", help="write run records JSON")
    c.add_argument("--csv", metavar="PATH", help="write the profile CSV (default stdout)")
    c.add_argument("--check", action="store_true", help="cross-check objectives with the oracle")
    return parser


def _fmt_obj(value: float | None) -> str:
    return "-" if value is None else f"{value:.10g}"


def cmd_solve(args) -> int:
    if (args.instance is None) == (args.random is None):
        print("error: give exactly one of an instance file or --random", file=sys.stderr)
        return EXIT_ERROR
    if args.random is not None:
        n, m = args.random
        problem = generate_random(args.seed, n, m)
    else:
        problem = load_problem(args.instance)
    config = _config(args, trace=bool(args.trace))
    result = solve(problem, config)
    st = result.stats
    print(f"instance   {problem.name}")
    print(f"status     {result.status}")
    print(f"objective  {_fmt_obj(result.objective)}")
    if result.x is not None:
        print("solution   " + " ".join(f"{name}={v:g}" for name, v in zip(problem.var_names, result.x)
                                        if v != 0))
    print(f"nodes {st.nodes}  offshoots {st.offshoots_created}  lps {st.lp_solves}  "
          f"iterations {st.lp_iterations}  trimmed {st.trim_removed}  time {st.wall_time:.3f}s")
    if args.trace:
        with open(args.trace, "w") as fh:
            for e in result.events:
                fh.write(json.dumps(e.as_dict()) + "\n")
    if args.record:
        rec = record_from_result(problem.name, "cli", result)
        Path(args.record).write_text(json.dumps(rec.to_dict(), indent=1) + "\n")
    if args.check:
        ref = enumerate_optimum(problem)
        agree = ref.status == result.status and (
            ref.objective is None or abs(ref.objective - result.objective) <= 1e-6)
        print(f"oracle     {ref.status} {_fmt_obj(ref.objective)} ({'agrees' if agree else 'DIFFERS'})")
        if not agree:
            return EXIT_ERROR
    return STATUS_EXIT[result.status]


def cmd_compare(args) -> int:
    if args.from_records:
        records = load_records(args.from_records)
    else:
        specs = args.config or DEFAULT_CONFIGS
        if len(specs) < 2:
            print("error: compare needs at least two configurations", file=sys.stderr)
            return EXIT_ERROR
        configs = [parse_config_spec(s) for s in specs]
        problems = [load_problem(p) for p in args.instances]
        problems += random_corpus(args.random, args.seed) if args.random else []
        if not problems:
            print("error: no instances", file=sys.stderr)
            return EXIT_ERROR
        problems.sort(key=lambda p: p.name)
        records, divergent = [], 0
        for p in problems:
            ref = enumerate_optimum(p) if args.check else None
            objs = set()
            for label, cfg in configs:
                cfg.time_limit = args.time_limit
                res = solve(p, cfg)
                records.append(record_from_result(p.name, label, res))
                if res.status in ("optimal", "infeasible"):
                    objs.add((res.status, None if res.objective is None else round(res.objective, 6)))
                if ref is not None and res.status != "limit":
                    if ref.status != res.status or (ref.objective is not None
                                                    and abs(ref.objective - res.objective) > 1e-6):
                        divergent += 1
                        print(f"divergence: {p.name} [{label}] {res.status} {_fmt_obj(res.objective)} "
                              f"vs oracle {ref.status} {_fmt_obj(ref.objective)}", file=sys.stderr)
            if len(objs) > 1:
                divergent += 1
                print(f"divergence: {p.name} configurations disagree: {sorted(objs, key=str)}",
                      file=sys.stderr)
        print(f"{len(problems)} instances x {len(configs)} configurations, {divergent} divergences")
        if args.records:
            save_records(records, args.records)
        if divergent:
            _report(records, args)
            return EXIT_ERROR
    _report(records, args)
    return EXIT_OPTIMAL


def _report(records: list[RunRecord], args) -> None:
    prof = performance_profile(records, args.metric)
    width = max(len(c) for c in prof.configs)
    print(f"geometric mean {args.metric} ratio over {prof.instances} instances:")
    for c in prof.configs:
        g = prof.geomean[c]
        print(f"  {c:<{width}}  {'n/a' if math.isnan(g) else f'{g:.4f}'}")
    csv = prof.to_csv()
    if args.csv:
        Path(args.csv).write_text(csv)
    else:
        sys.stdout.write(csv)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "solve":
            return cmd_solve(args)
        return cmd_compare(args)
    except (ModelError, OracleRefused, SearchError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
