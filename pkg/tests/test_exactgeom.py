from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symcap.exactgeom import (
    DegenerateSimplexError,
    DimensionMismatch,
    Polytope,
    SimplexImage,
    SpecialAffineTransform,
    ball,
    contains,
    ellipsoid,
    interiors_disjoint,
    moment_polytope,
    polydisk,
    scale_domain,
    simplex_vertices,
    standard_simplex,
)

F = Fraction


def shear(n=2):
    """The canonical shear along the last axis of E(1, 2)."""
    return SpecialAffineTransform(((1, 0), (-1, 1)), (F(0), F(1)))


# ---------------------------------------------------------------------------
# Transforms
# ---------------------------------------------------------------------------


def test_determinant_must_be_one():
    with pytest.raises(ValueError):
        SpecialAffineTransform(((1, 0), (0, -1)), (F(0), F(0)))
    with pytest.raises(ValueError):
        SpecialAffineTransform(((2, 0), (0, 1)), (F(0), F(0)))


def test_apply_and_compose():
    g = shear()
    assert g.apply((F(1), F(0))) == (F(1), F(0))
    assert g.apply((F(0), F(1))) == (F(0), F(2))
    gg = g.compose(g.inverse())
    assert gg == SpecialAffineTransform.identity(2)


# Product of an upper and a lower shear: always determinant one.
unimodular_2x2 = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).map(
    lambda t: (1 + t[0] * t[1], t[0], t[1], 1)
)
translations = st.tuples(st.fractions(-5, 5), st.fractions(-5, 5))


@given(unimodular_2x2, translations, unimodular_2x2, translations)
@settings(max_examples=60)
def test_group_laws(m1, t1, m2, t2):
    g1 = SpecialAffineTransform(((m1[0], m1[1]), (m1[2], m1[3])), t1)
    g2 = SpecialAffineTransform(((m2[0], m2[1]), (m2[2], m2[3])), t2)
    product = g1.compose(g2)  # determinant +1 is checked on construction
    assert product.compose(product.inverse()) == SpecialAffineTransform.identity(2)
    assert g1.inverse().compose(g1) == SpecialAffineTransform.identity(2)


# ---------------------------------------------------------------------------
# Moment polytopes and containment
# ---------------------------------------------------------------------------


def test_halfspace_normalization_is_canonical():
    a = Polytope.from_halfspaces([((F(1, 2), F(1, 4)), F(1, 2))])
    b = Polytope.from_halfspaces([((F(2), F(1)), F(2))])
    assert a == b
    assert a.constraints[0][0] == (2, 1)


def test_moment_polytope_shapes():
    tri = moment_polytope(ball(1))
    assert tri.contains_point((F(1, 2), F(1, 2)))
    assert not tri.contains_point((F(3, 4), F(3, 4)))
    square = moment_polytope(polydisk(1, 1))
    assert square.contains_point((F(1), F(1)))
    assert not square.contains_point((F(1), F(11, 10)))


def test_cylinder_moment_polytope_is_a_slab():
    slab = moment_polytope(ellipsoid(1, "inf"))
    assert slab.contains_point((F(1, 2), F(1000)))
    assert not slab.contains_point((F(11, 10), F(0)))


def test_contains_examples():
    e12 = moment_polytope(ellipsoid(1, 2))
    assert contains(e12, SimplexImage(F(1), shear()))
    assert contains(moment_polytope(polydisk(1, 1)), standard_simplex(1, 2))
    assert not contains(moment_polytope(ball(1)), standard_simplex(2, 2))


def test_containment_invariant_under_transform():
    e12 = moment_polytope(ellipsoid(1, 2))
    s = standard_simplex(1, 2)
    g = SpecialAffineTransform(((1, 1), (0, 1)), (F(3), F(-2)))
    moved = SimplexImage(s.capacity, g.compose(s.transform))
    assert contains(e12, s) == contains(e12.transform(g), moved)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        contains(moment_polytope(ball(1)), standard_simplex(1, 3))


# ---------------------------------------------------------------------------
# Disjointness
# ---------------------------------------------------------------------------


def test_disjoint_examples():
    s = standard_simplex(1, 2)
    sheared = SimplexImage(F(1), shear())
    assert interiors_disjoint(s, sheared)
    assert interiors_disjoint(sheared, s)  # symmetric
    assert not interiors_disjoint(s, s)
    far = SimplexImage(F(1), SpecialAffineTransform(((1, 0), (0, 1)), (F(5), F(5))))
    assert interiors_disjoint(s, far)


def test_touching_boundaries_are_disjoint():
    s = standard_simplex(1, 2)
    flipped = SimplexImage(
        F(1), SpecialAffineTransform(((-1, 0), (0, -1)), (F(1), F(1)))
    )
    # The two triangles tile the unit square, meeting along a diagonal.
    assert interiors_disjoint(s, flipped)


def test_overlap_detected():
    s = standard_simplex(2, 2)
    inner = SimplexImage(
        F(1), SpecialAffineTransform(((1, 0), (0, 1)), (F(1, 4), F(1, 4)))
    )
    assert not interiors_disjoint(s, inner)


def test_degenerate_vertex_set_rejected():
    from symcap.exactgeom import _check_full_dimensional

    with pytest.raises(DegenerateSimplexError):
        _check_full_dimensional([(F(0), F(0)), (F(1), F(0)), (F(2), F(0))])


def test_disjointness_in_three_dimensions():
    s = standard_simplex(1, 3)
    far = SimplexImage(
        F(1),
        SpecialAffineTransform(
            ((1, 0, 0), (0, 1, 0), (0, 0, 1)), (F(2), F(0), F(0))
        ),
    )
    assert interiors_disjoint(s, far)
    assert not interiors_disjoint(s, standard_simplex(1, 3))


# ---------------------------------------------------------------------------
# Scaling
# ---------------------------------------------------------------------------


def test_scale_domain_examples():
    assert scale_domain(ellipsoid(1, 2), 3).params == (F(3), F(6))
    assert scale_domain(polydisk(1, 1), 1).params == (F(1), F(1))
    assert scale_domain(ball(1), 2).params == (F(2), F(2))
    with pytest.raises(ValueError):
        scale_domain(ball(1), 0)


@given(st.fractions(min_value="1/7", max_value=9))
@settings(max_examples=40)
def test_scaled_moment_polytope_matches(lam):
    domain = ellipsoid(1, 2)
    direct = moment_polytope(scale_domain(domain, lam))
    scaled = moment_polytope(domain).scale(lam)
    assert direct == scaled


def test_bounding_box():
    assert moment_polytope(ellipsoid(1, 2)).bounding_box() == [
        (F(0), F(1)),
        (F(0), F(2)),
    ]
    with pytest.raises(ValueError):
        moment_polytope(ellipsoid(1, "inf")).bounding_box()
