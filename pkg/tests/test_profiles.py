from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symcap.profiles import (
    CPN,
    Piece,
    RadialProfile,
    Space,
    build_profile,
    bump,
    k_a,
    mu_delta,
    reeb,
    reeb_composite,
    s_a,
    t_s,
    two_ball,
    zero_profile,
)

F = Fraction


# ---------------------------------------------------------------------------
# The cut-off spline
# ---------------------------------------------------------------------------


def test_mu_delta_values():
    spline = mu_delta(F(1, 10))
    assert spline.value(-1) == F(1, 20)
    assert spline.value(F(1, 20)) == F(1, 16)
    assert spline.value(F(1, 5)) == F(1, 5)
    assert spline.value(F(1, 10)) == F(1, 10)


def test_mu_delta_derivative_monotone():
    spline = mu_delta(F(1, 10))
    assert spline.derivative(-1) == 0
    assert spline.derivative(F(1, 20)) == F(1, 2)
    assert spline.derivative(F(1, 5)) == 1
    with pytest.raises(ValueError):
        mu_delta(0)


@given(st.fractions(min_value="-2", max_value="2"))
@settings(max_examples=100)
def test_mu_delta_convex_envelope(x):
    # mu_delta dominates both the constant delta/2 and the identity.
    spline = mu_delta(F(1, 7))
    assert spline.value(x) >= max(F(1, 14), x)


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def test_bump_values():
    profile = bump(1, F(9, 10), F(1, 100))
    assert profile.value(0) == F(179, 200)
    assert profile.value(1) == 0
    assert profile.value(5) == 0
    assert profile.derivative(F(1, 2)) == F(-9, 10)
    with pytest.raises(ValueError):
        bump(1, F(9, 10), 1)  # delta must stay below eta * a


def test_reeb_values():
    profile = reeb(F(1, 2), F(1, 10))
    assert profile.value(0) == F(-21, 40)
    assert profile.value(1) == F(-21, 40)
    assert profile.value(2) == -1
    assert reeb(0, F(1, 10)).value(3) == 0


def test_reeb_composite_values():
    profile = reeb_composite(F(3, 4), F(1, 10))
    assert profile.value(0) == F(-63, 40)
    assert profile.value(1) == F(-63, 40) + 1
    assert profile.value(2) == -1
    assert profile.derivative(F(1, 2)) == 1


def test_s_a_and_k_a():
    assert s_a(F(1, 4)).value(1) == F(3, 4)
    assert s_a(F(1, 4)).value(0) == F(-1, 4)
    kinked = k_a(F(1, 2))
    assert kinked.value(0) == F(-1, 2)
    assert kinked.value(F(3, 4)) == 0
    assert not kinked.smooth


def test_t_s_values():
    profile = t_s(F(1, 2), F(1, 10), 0)
    assert profile.value(0) == F(-1, 10)
    assert profile.value(F(3, 4)) == 0
    assert t_s(F(1, 2), F(1, 10), 1).value(0) == F(-1, 2)
    # Where the kink value equals -eps, every family member agrees.
    a, eps = F(1, 2), F(1, 10)
    x_star = a - eps
    for s in (F(0), F(1, 3), F(1)):
        assert t_s(a, eps, s).value(x_star) == -eps


def test_two_ball_supports():
    system = two_ball(1, 1, F(9, 10), F(4, 5), F(1, 100))
    assert system.positive.value(0) == F(179, 200)
    assert system.negative.value(0) == F(-159, 200)
    assert system.negate().positive.value(0) == F(159, 200)


def test_build_profile_dispatch():
    assert build_profile("bump", a=1, eta=F(9, 10), delta=F(1, 100)).value(0) == F(179, 200)
    assert build_profile("zero").value(17) == 0
    with pytest.raises(ValueError):
        build_profile("nope")


# ---------------------------------------------------------------------------
# Structural invariants
# ---------------------------------------------------------------------------

smooth_profiles = [
    bump(1, F(9, 10), F(1, 100)),
    bump(F(3, 2), F(1, 2), F(1, 10)),
    reeb(F(1, 2), F(1, 10)),
    reeb_composite(F(3, 4), F(1, 10)),
    s_a(F(1, 4)),
]


@pytest.mark.parametrize("profile", smooth_profiles, ids=lambda p: p.construction)
def test_c1_across_breakpoints(profile):
    for r in profile.breakpoints():
        eps = F(1, 10**9)
        left = profile.piece_at(r - eps)
        right = profile.piece_at(r + eps) if (profile.space.kind != CPN or r < 1) else profile.piece_at(r)
        from symcap.profiles import poly_derivative, poly_eval

        assert poly_eval(left.coeffs, r) == poly_eval(right.coeffs, r)
        assert poly_derivative(left.coeffs, r) == poly_derivative(right.coeffs, r)


def test_kinked_profiles_are_continuous_but_not_c1():
    profile = k_a(F(1, 2))
    from symcap.profiles import poly_derivative, poly_eval

    (left, right) = profile.pieces
    assert poly_eval(left.coeffs, right.lo) == poly_eval(right.coeffs, right.lo)
    assert poly_derivative(left.coeffs, right.lo) != poly_derivative(right.coeffs, right.lo)


def test_profile_validation():
    with pytest.raises(ValueError):
        RadialProfile((), Space("cn", 1))
    with pytest.raises(ValueError):  # must start at 0
        RadialProfile((Piece(F(1), None, (F(0), F(0), F(0))),), Space("cn", 1))
    with pytest.raises(ValueError):  # quadratic tail
        RadialProfile((Piece(F(0), None, (F(0), F(0), F(1))),), Space("cn", 1))
    with pytest.raises(ValueError):  # discontinuous
        RadialProfile(
            (
                Piece(F(0), F(1), (F(0), F(0), F(0))),
                Piece(F(1), None, (F(1), F(0), F(0))),
            ),
            Space("cn", 1),
        )


def test_negate_round_trip():
    profile = bump(1, F(9, 10), F(1, 100))
    assert profile.negate().negate().pieces == profile.pieces
    assert profile.negate().value(0) == -profile.value(0)


@given(st.fractions(min_value="1/5", max_value=5), st.fractions(min_value=0, max_value=3))
@settings(max_examples=100)
def test_conformal_scaling_pointwise(lam, r):
    profile = reeb_composite(F(3, 4), F(1, 10))
    scaled = profile.scale_conformal(lam)
    assert scaled.value(lam * r) == lam * profile.value(r)
    assert scaled.derivative(lam * r) == profile.derivative(r)


def test_zero_profile_both_spaces():
    assert zero_profile().value(10) == 0
    assert zero_profile(Space(CPN, 1)).value(F(1, 2)) == 0
