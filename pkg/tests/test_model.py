import json
import math
import time

import numpy as np
import pytest
from hypothesis import given, strategies as st

from offshoot.model import (ModelError, MpsError, RandomProfile, dumps_json, example1,
                            generate_random, load_problem, parse_mps, problem_from_json,
                            random_corpus, write_mps)
from offshoot.oracle import enumerate_optimum

FIXED_FORMAT = """\
NAME          TINY
ROWS
 N  COST
 L  LIM1
 G  LIM2
COLUMNS
    MARKER                 'MARKER'                 'INTORG'
    X1        COST         1.0   LIM1         1.0
    X1        LIM2         1.0
    MARKER                 'MARKER'                 'INTEND'
    Y         COST         2.0   LIM1         1.0
RHS
    RHS       LIM1         4.0   LIM2         1.0
BOUNDS
 UP BND       X1           4.0
 MI BND       Y
 UP BND       Y            1.0
ENDATA
"""


def test_mps_fixture_matches_example(fixtures_dir, ex1):
    p = parse_mps((fixtures_dir / "example1.mps").read_bytes())
    assert p.num_vars == 3 and p.num_rows == 4
    assert p.objective == (1.0, -2.0, -6.0)
    assert all(p.integral)
    assert p.lower == (0, 0, 0) and p.upper == (1, 1, 1)
    assert p == ex1


def test_json_fixture_matches_example(fixtures_dir, ex1):
    assert load_problem(str(fixtures_dir / "example1.json")) == ex1


def test_fixed_format_sections():
    p = parse_mps(FIXED_FORMAT)
    assert p.var_names == ("X1", "Y")
    assert p.integral == (True, False)
    assert p.lower == (0.0, -math.inf) and p.upper == (4.0, 1.0)
    assert [r.sense for r in p.rows] == ["<=", ">="]
    assert [r.rhs for r in p.rows] == [4.0, 1.0]


def test_name_and_endata_only_is_empty():
    with pytest.raises(MpsError, match="empty problem"):
        parse_mps("NAME nothing\nENDATA\n")


def test_bv_bound():
    text = "NAME t\nROWS\n N obj\nCOLUMNS\n    x obj 1\nBOUNDS\n BV bnd x\nENDATA\n"
    p = parse_mps(text)
    assert (p.lower, p.upper, p.integral) == ((0.0,), (1.0,), (True,))


def test_objsense_max_is_recorded():
    text = "NAME t\nOBJSENSE\n    MAX\nROWS\n N obj\nCOLUMNS\n    x obj 3\nBOUNDS\n UP bnd x 2\nENDATA\n"
    p = parse_mps(text)
    assert p.sense == "max" and p.metadata["objective_sign"] == -1
    assert p.lp.objective[0] == -3.0
    assert p.user_objective(-6.0) == 6.0


@pytest.mark.parametrize("text, line, pattern", [
    ("NAME t\nROWZ\nENDATA\n", 2, "unknown section"),
    ("NAME t\nROWS\n N obj\n G r\n L r\nENDATA\n", 5, "duplicate row"),
    ("NAME t\nROWS\n N obj\nCOLUMNS\n    x obj 1\n    y obj 1\n    x obj 2\nENDATA\n", 7, "duplicate column"),
    ("NAME t\nROWS\n N obj\nRANGES\nENDATA\n", 4, "RANGES"),
    ("NAME t\nROWS\n N obj\nCOLUMNS\n    x obj 1.2.3\nENDATA\n", 5, "number"),
    ("NAME t\nROWS\n N obj\nCOLUMNS\n    x nope 1\nENDATA\n", 5, "unknown row"),
    ("NAME t\nROWS\n N obj\nCOLUMNS\n    x obj 1\nBOUNDS\n XX bnd x 1\nENDATA\n", 7, "bound type"),
])
def test_mps_errors_are_located(text, line, pattern):
    with pytest.raises(MpsError, match=pattern) as info:
        parse_mps(text)
    assert info.value.location == line


def test_missing_endata():
    with pytest.raises(MpsError, match="ENDATA"):
        parse_mps("NAME t\nROWS\n N obj\nCOLUMNS\n    x obj 1\n")


def _numeric_slots_mps(text):
    slots = []
    for i, line in enumerate(text.splitlines()):
        if not line[:1].isspace():
            continue
        for k, tok in enumerate(line.split()):
            try:
                float(tok)
            except ValueError:
                continue
            slots.append((i, k))
    return slots


CORRUPT = ["abc", "1.2.3", "nan", "1e", "--2", "0x10", "4,5"]


@given(st.data())
def test_mps_numeric_corruption_rejected(data):
    p = generate_random(data.draw(st.integers(0, 10 ** 6)), 4, 3, RandomProfile(continuous=1))
    text = write_mps(p)
    slots = _numeric_slots_mps(text)
    i, k = data.draw(st.sampled_from(slots))
    lines = text.splitlines()
    toks = lines[i].split()
    toks[k] = data.draw(st.sampled_from(CORRUPT))
    lines[i] = "    " + " ".join(toks)
    with pytest.raises(MpsError) as info:
        parse_mps("\n".join(lines))
    assert info.value.location == i + 1


def _json_paths(obj, path=()):
    if isinstance(obj, dict):
        for k, v in obj.items():
            if k in ("name", "sense", "integral"):
                continue
            yield from _json_paths(v, path + (k,))
    elif isinstance(obj, list):
        for k, v in enumerate(obj):
            yield from _json_paths(v, path + (k,))
    elif isinstance(obj, (int, float)) and not isinstance(obj, bool):
        yield path


@given(st.data())
def test_json_numeric_corruption_rejected(data):
    p = generate_random(data.draw(st.integers(0, 10 ** 6)), 4, 3)
    doc = json.loads(dumps_json(p))
    paths = list(_json_paths(doc))
    path = data.draw(st.sampled_from(paths))
    target = doc
    for key in path[:-1]:
        target = target[key]
    target[path[-1]] = data.draw(st.sampled_from(["abc", True, [1], {"v": 1}, "NaN"]))
    with pytest.raises(ModelError) as info:
        problem_from_json(json.dumps(doc))
    assert info.value.location is not None


def test_json_rejects_nan_and_infinite_coefficients():
    base = json.loads(dumps_json(example1()))
    for bad in ("NaN", "Infinity", "-Infinity"):
        text = json.dumps(base).replace('"rhs": -8.0', f'"rhs": {bad}')
        with pytest.raises(ModelError, match="rows\\[0\\]"):
            problem_from_json(text)


def test_json_errors():
    with pytest.raises(ModelError, match="missing key"):
        problem_from_json('{"objective": [], "rows": []}')
    with pytest.raises(ModelError, match="unknown variable"):
        problem_from_json('{"objective": {"z": 1}, "rows": [], "vars": [{"name": "x"}]}')
    with pytest.raises(ModelError, match="line 1"):
        problem_from_json("{oops")
    with pytest.raises(ModelError, match="exceeds upper"):
        problem_from_json('{"objective": [1], "rows": [], "vars": [{"name": "x", "lb": 2, "ub": 1}]}')


profiles = st.builds(RandomProfile, density=st.floats(0.2, 1.0), continuous=st.integers(0, 3),
                     equality_prob=st.floats(0, 0.5))


@given(st.integers(0, 2 ** 31), st.integers(1, 12), st.integers(0, 10), profiles)
def test_json_round_trip(seed, n, m, profile):
    p = generate_random(seed, n, m, profile)
    assert problem_from_json(dumps_json(p)) == p


@given(st.integers(0, 2 ** 31), st.integers(1, 12), st.integers(1, 10), profiles)
def test_mps_round_trip(seed, n, m, profile):
    p = generate_random(seed, n, m, profile)
    q = parse_mps(write_mps(p))
    assert q.objective == p.objective and q.integral == p.integral
    assert q.lower == p.lower and q.upper == p.upper
    np.testing.assert_array_equal(q.lp.A, p.lp.A)
    np.testing.assert_array_equal(q.lp.rhs, p.lp.rhs)


def test_generator_is_reproducible():
    a, b = generate_random(1, 3, 2), generate_random(1, 3, 2)
    assert a == b
    assert generate_random(2, 3, 2) != a


def test_generator_binaries_and_boxes():
    for p in random_corpus(50, seed=3, profile=RandomProfile(continuous=2)):
        lp = p.lp
        ints = p.integer_indices
        assert np.all(lp.lower[ints] == 0) and np.all(lp.upper[ints] == 1)
        assert np.all(np.isfinite(lp.lower)) and np.all(np.isfinite(lp.upper))


def test_generator_limits():
    with pytest.raises(ModelError):
        generate_random(0, 13, 2)
    with pytest.raises(ModelError):
        generate_random(0, 3, 11)


def test_oracle_handles_generated_batch_quickly():
    for p in random_corpus(100, seed=4):
        t0 = time.perf_counter()
        enumerate_optimum(p)
        assert time.perf_counter() - t0 < 1.0
