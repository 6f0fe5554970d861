import math

import numpy as np
import pytest
from hypothesis import example, given, strategies as st

from offshoot.branching import (DOWN, UP, PseudocostStore, fractional_distances, select_dive_variable,
                                select_offshoot_variable)
from offshoot.lp import DualSimplex, apply_bound
from offshoot.model import generate_random, make_problem
from offshoot.search import BoundChange, Offshoot


def test_first_update():
    s = PseudocostStore(2)
    assert s.update(0, UP, 1.5, 0.5)
    assert s.unit(0, UP) == 3.0 and s.counts[0, UP] == 1
    assert not s.reliable(0)


def test_five_updates_make_reliable():
    s = PseudocostStore(1)
    for _ in range(5):
        s.update(0, UP, 1.0, 0.5)
        s.update(0, DOWN, 1.0, 0.5)
    assert s.reliable(0)


def test_zero_distance_skipped():
    s = PseudocostStore(1)
    assert not s.update(0, DOWN, 2.0, 0.0)
    assert s.counts.sum() == 0


def test_negative_degradation_clamped():
    s = PseudocostStore(1)
    s.update(0, DOWN, -1e-7, 0.5)
    assert s.unit(0, DOWN) == 0.0


def test_unknown_unit_falls_back():
    s = PseudocostStore(3)
    assert s.unit(2, UP) == 1.0
    s.update(0, UP, 2.0, 1.0)
    s.update(1, UP, 4.0, 1.0)
    assert s.unit(2, UP) == 3.0


def test_integral_values_score_at_half():
    assert fractional_distances(1.0) == (0.5, 0.5)
    assert fractional_distances(2.25) == pytest.approx((0.25, 0.75))


def _fail(*args):
    raise AssertionError("strong branching should not run")


def test_single_candidate_skips_scoring():
    c = select_dive_variable(np.array([1 / 3, 1, 1]), -23 / 3, [0], PseudocostStore(3), _fail, "up")
    assert (c.var, c.direction) == (0, UP)


def test_reliable_candidates_use_no_lps():
    s = PseudocostStore(3, reliability=1)
    for j, (d, u) in enumerate([(1, 1), (3, 2), (1, 5)]):
        s.update(j, DOWN, d, 1.0)
        s.update(j, UP, u, 1.0)
    c = select_dive_variable(np.array([0.5, 0.5, 0.5]), 0.0, [0, 1, 2], s, _fail)
    # product scores 0.25, 1.5, 1.25
    assert c.var == 1 and c.strong_lps == 0


def test_one_sided_infeasibility_is_a_domain_reduction():
    # min x1 + x2, x1 - x2 >= 0.3, x2 >= 0.4: root (0.7, 0.4); x1 <= 0 is infeasible
    p = make_problem([1, 1], [({0: 1, 1: -1}, ">=", 0.3), ({1: 1}, ">=", 0.4)], [0, 0], [1, 1],
                     [True, True])
    lp = p.lp
    solver = DualSimplex(lp)
    node = solver.solve()
    x = node.primal
    np.testing.assert_allclose(x, [0.7, 0.4])

    def strong(j, direction, cap):
        side, value = ("upper", math.floor(x[j])) if direction == DOWN else ("lower", math.ceil(x[j]))
        return solver.solve(*apply_bound(lp.lower, lp.upper, j, side, value), node.basis, cap)

    choice = select_dive_variable(x, node.objective, [0, 1], PseudocostStore(2), strong, "round")
    assert solver.solve(*apply_bound(lp.lower, lp.upper, 0, "upper", 0.0)).infeasible
    assert solver.solve(*apply_bound(lp.lower, lp.upper, 0, "lower", 1.0)).optimal
    assert (choice.var, choice.direction, choice.reason) == (0, UP, "domain-reduction")


def _offshoot(r=None):
    D = [BoundChange(j, "lower", 1.0, 0.5) for j in range(3)]
    return Offshoot(0, [], list(D), list(D), 0.0, None, None if r is None else np.array(r, float))


def test_bottom_and_top_strategies():
    o = _offshoot()
    store = PseudocostStore(3)
    b = select_offshoot_variable(o, "bottom", store)
    assert (b.change.var, b.side) == (2, "bottom")
    t = select_offshoot_variable(o, "top", store)
    assert (t.change.var, t.side) == (0, "top")


def test_pseudodual_without_reliable_entries():
    c = select_offshoot_variable(_offshoot([3, 4, 2]), "pseudodual", PseudocostStore(3))
    assert (c.change.var, c.side) == (2, "bottom")


def test_pseudo_prefers_reliable_from_top():
    store = PseudocostStore(3, reliability=1)
    store.update(1, UP, 1.0, 0.5)
    store.update(1, DOWN, 1.0, 0.5)
    c = select_offshoot_variable(_offshoot([3, 4, 2]), "pseudo", store)
    assert (c.change.var, c.side) == (1, "top")
    store.update(0, UP, 9.0, 0.5)
    store.update(0, DOWN, 9.0, 0.5)
    assert select_offshoot_variable(_offshoot(), "pseudodual", store).change.var == 0


def test_pseudo_worst_score_from_bottom_with_tie_break():
    c = select_offshoot_variable(_offshoot(), "pseudo", PseudocostStore(3))
    assert (c.change.var, c.side) == (0, "bottom")


def test_empty_offshoot_rejected():
    o = _offshoot()
    o.D = []
    with pytest.raises(ValueError):
        select_offshoot_variable(o, "bottom", PseudocostStore(3))


def _scaled(p, factors):
    rows = [({j: v * f for j, v in r.coefs}, r.sense, r.rhs * f) for r, f in zip(p.rows, factors)]
    return make_problem(p.objective, rows, p.lower, p.upper, p.integral)


def _dive_choice(p):
    lp = p.lp
    solver = DualSimplex(lp)
    root = solver.solve()
    if not root.optimal:
        return None
    x = root.primal
    frac = [j for j in range(lp.num_vars) if abs(x[j] - round(x[j])) > 1e-6]
    if not frac:
        return None

    def strong(j, direction, cap):
        side, value = ("upper", math.floor(x[j])) if direction == DOWN else ("lower", math.ceil(x[j]))
        return solver.solve(*apply_bound(lp.lower, lp.upper, j, side, value), root.basis, cap)
    c = select_dive_variable(x, root.objective, frac, PseudocostStore(lp.num_vars), strong,
                             iteration_cap=10 ** 6)
    return c.var, c.direction


@given(st.integers(0, 2 ** 31), st.integers(2, 8), st.integers(1, 6),
       st.lists(st.sampled_from([0.5, 2.0, 3.0, 10.0]), min_size=6, max_size=6))
@example(1030, 3, 3, [3.0, 0.5, 10.0, 0.5, 0.5, 0.5])  # LP value 0.5 up to rounding noise
def test_choice_invariant_under_row_scaling(seed, n, m, factors):
    p = generate_random(seed, n, m)
    assert _dive_choice(p) == _dive_choice(_scaled(p, factors[:m]))
