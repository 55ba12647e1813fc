import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouporders.errors import IdentityElement, NonAutomorphism, ParseError
from grouporders.klein import (KleinAut, KleinElement, KleinOrdering, abelianized,
                               alpha1, alpha2, alpha3, identity_aut, inner_by,
                               is_inner, k_enumerate_orderings, k_mul, k_out_table,
                               k_pull, k_sign, parse_klein, parse_klein_aut,
                               survey_ball_orderings)

X = KleinElement(1, 0)
Y = KleinElement(0, 1)


def test_mul_examples():
    assert k_mul(X, Y) == KleinElement(1, 1)
    assert k_mul(Y, X) == KleinElement(1, -1)


def test_defining_relation():
    assert X.inverse() * Y * X == Y.inverse()


elements = st.builds(KleinElement, st.integers(-6, 6), st.integers(-6, 6))


@settings(max_examples=200, deadline=None)
@given(elements, elements, elements)
def test_mul_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@settings(max_examples=100, deadline=None)
@given(elements)
def test_inverse(p):
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


def test_parse_klein():
    assert parse_klein("x^2 y^-3") == KleinElement(2, -3)
    assert parse_klein("y x y") == KleinElement(1, 0)
    assert parse_klein("1").is_identity()
    with pytest.raises(ParseError):
        parse_klein("z")


def test_sign_examples():
    pp = KleinOrdering(1, 1)
    assert k_sign(pp, KleinElement(3, -5)) == 1
    assert k_sign(pp, KleinElement(0, -1)) == -1
    assert k_sign(KleinOrdering(-1, 1), KleinElement(1, 0)) == -1
    with pytest.raises(IdentityElement):
        k_sign(pp, KleinElement(0, 0))


def test_enumerate_orderings():
    orderings = k_enumerate_orderings()
    assert len(orderings) == 4
    # pairwise distinct already on the radius-1 ball
    ball = [KleinElement(1, 0), KleinElement(-1, 0), KleinElement(0, 1),
            KleinElement(0, -1)]
    profiles = {tuple(o.sign(p) for p in ball) for o in orderings}
    assert len(profiles) == 4
    # opposite pairing
    for o in orderings:
        assert o.opposite() in orderings
        assert all(o.opposite().sign(p) == -o.sign(p) for p in ball)


def test_no_ordering_is_bi_invariant():
    for o in k_enumerate_orderings():
        conj = X * Y * X.inverse()
        assert o.sign(conj) == -o.sign(Y)


def test_automorphism_validation():
    with pytest.raises(NonAutomorphism):
        KleinAut(KleinElement(2, 0), Y)  # x^-2 y x^2 = y, relation fails
    with pytest.raises(NonAutomorphism):
        KleinAut(X, KleinElement(0, 2))  # relation holds but no inverse exists
    with pytest.raises(NonAutomorphism):
        KleinAut(Y, X)


def test_k_pull_examples():
    orderings = k_enumerate_orderings()
    for o in orderings:
        assert k_pull(identity_aut(), o) == o
        assert k_pull(alpha1(), o) == o
        assert k_pull(alpha3(), o) == KleinOrdering(-o.eps, -o.delta)


def test_k_pull_well_defined_up_to_inner_on_these_cones():
    # composing with inner automorphisms by x^(2k) or y fixes each cone
    for o in k_enumerate_orderings():
        for c in (KleinElement(0, 1), KleinElement(2, 0), KleinElement(2, 3)):
            assert k_pull(inner_by(c).compose(alpha1()), o) == \
                k_pull(alpha1(), o)


def test_alpha1_non_inner_alpha2_differs_by_inner():
    assert is_inner(alpha1()) is None
    assert abelianized(alpha1().apply(X)) != abelianized(X)
    conj = is_inner(alpha2().compose(alpha1().inverse()))
    assert conj is not None
    assert inner_by(conj).compose(alpha1()).apply(X) == alpha2().apply(X)


def test_out_table():
    table = k_out_table()
    assert table.is_klein_four_group
    assert set(table.class_names) == {"1", "a1", "a3", "a1a3"}
    assert table.actions["a1"] == (0, 1, 2, 3)
    assert table.actions["a3"] != (0, 1, 2, 3)
    assert "a1" in table.action_kernel
    assert not table.faithful_on_orderings
    assert len(table.conjugacy_orbits) == 2


def test_conjugation_by_y_fixes_all_orderings():
    conj = inner_by(Y)
    assert not conj.is_identity()
    for o in k_enumerate_orderings():
        assert k_pull(conj, o) == o


def test_exhaustive_ball_survey_finds_exactly_four():
    locally_consistent, extendable = survey_ball_orderings(3, 5)
    assert extendable == 4
    assert locally_consistent >= 4
