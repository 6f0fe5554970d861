import json
import math
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from offshoot.cli import main, parse_config_spec
from offshoot.profiles import RunRecord, load_records, performance_profile, save_records


def _run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_solve_example_default(fixtures_dir, capsys):
    code, out = _run(["solve", str(fixtures_dir / "example1.json"), "--strategy", "pseudodual"], capsys)
    assert code == 0
    assert "objective  -2" in out.out and "status     optimal" in out.out


@pytest.mark.parametrize("flags", [["--max-dive-depth", "0"], ["--trim", "off"], ["--bounding", "3"],
                                   ["--bounding", "off", "--strategy", "top"], ["--plunge"],
                                   ["--split-threshold", "1", "--dive-direction", "up"]])
def test_solve_flags_keep_optimum(fixtures_dir, capsys, flags):
    code, out = _run(["solve", str(fixtures_dir / "example1.mps"), *flags], capsys)
    assert code == 0 and "objective  -2" in out.out


def test_exit_codes(tmp_path, capsys, fixtures_dir):
    inf = tmp_path / "inf.json"
    inf.write_text(json.dumps({"objective": [1], "rows": [{"coefs": {"x": 1}, "sense": ">=", "rhs": 2}],
                               "vars": [{"name": "x", "lb": 0, "ub": 1, "integral": True}]}))
    assert main(["solve", str(inf)]) == 10
    assert main(["solve", str(fixtures_dir / "example1.json"), "--node-limit", "1"]) == 11
    unb = tmp_path / "unb.json"
    unb.write_text(json.dumps({"objective": [-1], "rows": [],
                               "vars": [{"name": "x", "lb": 0, "ub": None}]}))
    assert main(["solve", str(unb)]) == 12
    bad = tmp_path / "bad.mps"
    bad.write_text("NAME x\nROWZ\nENDATA\n")
    assert main(["solve", str(bad)]) == 1
    assert "line 2" in capsys.readouterr().err
    with pytest.raises(SystemExit) as info:
        main(["solve", "--strategy", "nope", "x.json"])
    assert info.value.code == 2


def test_module_entry_point(fixtures_dir):
    proc = subprocess.run([sys.executable, "-m", "offshoot", "solve", str(fixtures_dir / "example1.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "objective  -2" in proc.stdout


def test_random_instance_with_check_and_outputs(tmp_path, capsys):
    trace, record = tmp_path / "t.jsonl", tmp_path / "r.json"
    code, out = _run(["solve", "--random", "8x5", "--seed", "4", "--check", "--trace", str(trace),
                      "--record", str(record)], capsys)
    assert code in (0, 10) and "agrees" in out.out
    events = [json.loads(line) for line in trace.read_text().splitlines()]
    assert events[0]["kind"] == "root"
    rec = RunRecord.from_dict(json.loads(record.read_text()))
    assert rec.nodes == sum(e["node"] is not None for e in events)


def test_solve_needs_one_source(capsys):
    assert main(["solve"]) == 1


def test_config_spec():
    label, cfg = parse_config_spec("bb:strategy=top,depth=0,trim=off,bounding=off,split=off")
    assert label == "bb"
    assert (cfg.strategy, cfg.max_dive_depth, cfg.trim, cfg.bounding, cfg.split_threshold) == \
        ("top", 0, False, 0, None)
    assert parse_config_spec("strategy=bottom")[0] == "strategy=bottom"
    with pytest.raises(ValueError):
        parse_config_spec("colour=red")


def _rec(inst, cfg, t, status="optimal", nodes=1):
    return RunRecord(inst, cfg, cfg, status, 0.0, nodes, 0, 0, t)


def test_identical_configs_profile_one():
    recs = [_rec(f"i{k}", c, 0.5 + k) for k in range(3) for c in ("a", "b")]
    prof = performance_profile(recs)
    assert prof.taus[0] == 1.0
    assert prof.rho["a"][0] == prof.rho["b"][0] == 1.0


def test_crossed_times_profile():
    recs = [_rec("i1", "a", 1), _rec("i1", "b", 2), _rec("i2", "a", 2), _rec("i2", "b", 1)]
    prof = performance_profile(recs)
    assert prof.taus == [1.0, 2.0]
    assert prof.rho == {"a": [0.5, 1.0], "b": [0.5, 1.0]}
    assert prof.to_csv() == "tau,a,b\n1,0.5,0.5\n2,1,1\n"
    assert prof.geomean["a"] == pytest.approx(math.sqrt(2))


def test_unsolved_everywhere_is_excluded(caplog):
    recs = [_rec("i1", "a", 1), _rec("i1", "b", 3), _rec("i2", "a", 1, "limit"), _rec("i2", "b", 1, "limit"),
            _rec("i3", "a", 1, "limit"), _rec("i3", "b", 2)]
    prof = performance_profile(recs)
    assert "i2 excluded" in caplog.text
    assert prof.instances == 2
    assert prof.rho["a"][-1] == 0.5  # never solves i3
    assert prof.geomean["a"] == 1.0  # only i1 is solved by both


def test_nodes_metric():
    recs = [_rec("i1", "a", 9, nodes=4), _rec("i1", "b", 1, nodes=8)]
    assert performance_profile(recs, "nodes").rho["a"][0] == 1.0


records = st.lists(st.tuples(st.integers(0, 6), st.sampled_from(["a", "b", "c"]),
                             st.floats(1e-3, 100), st.sampled_from(["optimal", "infeasible", "limit"])),
                   min_size=1, max_size=40)


@given(records)
def test_profiles_monotone_and_bounded(rows):
    recs = {(f"i{i}", c): _rec(f"i{i}", c, t, s) for i, c, t, s in rows}
    recs = list(recs.values())
    if len({r.config for r in recs}) < 2:
        return
    prof = performance_profile(recs)
    for c in prof.configs:
        vals = prof.rho[c]
        assert all(0.0 <= v <= 1.0 for v in vals)
        assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_records_round_trip(tmp_path):
    recs = [_rec("i1", "a", 1.25), RunRecord("i2", "b", "fp", "limit", None, 3, 1, 9, 0.5)]
    save_records(recs, tmp_path / "r.json")
    assert load_records(tmp_path / "r.json") == recs


def test_compare_and_reproduce_csv(tmp_path, capsys):
    rec, csv1, csv2 = tmp_path / "r.json", tmp_path / "a.csv", tmp_path / "b.csv"
    code, out = _run(["compare", "--random", "15", "--seed", "2", "--check", "--config", "strategy=bottom",
                      "--config", "strategy=pseudodual", "--config", "bb:depth=0", "--records", str(rec),
                      "--csv", str(csv1)], capsys)
    assert code == 0 and "0 divergences" in out.out
    assert csv1.read_text().startswith("tau,strategy=bottom,strategy=pseudodual,bb\n")
    assert main(["compare", "--from-records", str(rec), "--csv", str(csv2)]) == 0
    assert csv1.read_bytes() == csv2.read_bytes()
    assert main(["compare", "--from-records", str(rec), "--metric", "nodes", "--csv", str(csv2)]) == 0


def test_compare_needs_two_configs(capsys):
    assert main(["compare", "--random", "2", "--config", "strategy=top"]) == 1
