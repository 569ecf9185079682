from fractions import Fraction

from symcap.linprog import INFEASIBLE, OPTIMAL, UNBOUNDED, maximize_over_polytope, solve_lp

F = Fraction


def test_simple_equality_lp():
    # max x + y  s.t.  x + y + s = 1
    status, x, value = solve_lp(
        [F(1), F(1), F(0)], [[F(1), F(1), F(1)]], [F(1)]
    )
    assert status == OPTIMAL
    assert value == 1


def test_infeasible():
    # x = -1 with x >= 0 is impossible.
    status, x, value = solve_lp([F(1)], [[F(1)], [F(1)]], [F(1), F(2)])
    assert status == INFEASIBLE


def test_unbounded():
    status, value = maximize_over_polytope([F(1), F(0)], [[F(-1), F(0)]], [F(0)])
    assert status == UNBOUNDED


def test_box_maximum_is_exact():
    # max 2x + 3y over the unit square.
    a_ub = [[F(1), F(0)], [F(0), F(1)]]
    status, value = maximize_over_polytope([F(2), F(3)], a_ub, [F(1), F(1)])
    assert status == OPTIMAL
    assert value == 5


def test_fractional_vertex():
    # max x + y over x + 2y <= 1, 2x + y <= 1: optimum at (1/3, 1/3).
    a_ub = [[F(1), F(2)], [F(2), F(1)]]
    status, value = maximize_over_polytope([F(1), F(1)], a_ub, [F(1), F(1)])
    assert status == OPTIMAL
    assert value == F(2, 3)


def test_degenerate_cycling_guard():
    # A classic degenerate instance; Bland's rule must terminate.
    a_ub = [
        [F(1, 4), F(-8), F(-1), F(9)],
        [F(1, 2), F(-12), F(-1, 2), F(3)],
        [F(0), F(0), F(1), F(0)],
    ]
    b_ub = [F(0), F(0), F(1)]
    objective = [F(3, 4), F(-20), F(1, 2), F(-6)]
    status, value = maximize_over_polytope(objective, a_ub, b_ub)
    assert status == OPTIMAL
    assert value == F(5, 4)
