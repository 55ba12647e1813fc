import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouporders.errors import IsIdentity, NoCone
from grouporders.znord import (FlagOrdering, IntegerAutomorphism, act, flag_sign,
                               gl_witness, opposite, realize_flag)

I2 = FlagOrdering.identity(2)


def test_flag_sign_lex():
    assert flag_sign(FlagOrdering.identity(3), (0, 0, 3)) == 1
    assert flag_sign(I2, (-1, 7)) == -1
    assert flag_sign(I2, (0, 0)) == 0


def test_flag_sign_swapped_rows():
    f = FlagOrdering([[0, 1], [1, 0]])
    assert flag_sign(f, (5, -1)) == -1


def test_opposite_is_involution():
    f = FlagOrdering([[2, 1], [0, 3]])
    assert opposite(opposite(f)).rows == f.rows
    assert flag_sign(opposite(I2), (1, 0)) == -1


vectors = st.tuples(st.integers(-9, 9), st.integers(-9, 9)).filter(lambda v: any(v))


@settings(max_examples=100, deadline=None)
@given(vectors)
def test_opposite_flips_every_sign(v):
    f = FlagOrdering([[1, 2], [1, 1]])
    assert flag_sign(opposite(f), v) == -flag_sign(f, v)


@settings(max_examples=100, deadline=None)
@given(vectors)
def test_flag_sign_antisymmetry_and_totality(v):
    f = FlagOrdering([[3, -1], [0, 2]])
    assert flag_sign(f, v) in (1, -1)
    assert flag_sign(f, tuple(-x for x in v)) == -flag_sign(f, v)


@settings(max_examples=80, deadline=None)
@given(vectors, vectors)
def test_flag_sign_semigroup(u, v):
    f = FlagOrdering([[1, 1], [1, 0]])
    total = (u[0] + v[0], u[1] + v[1])
    if flag_sign(f, u) == flag_sign(f, v) == 1 and any(total):
        assert flag_sign(f, total) == 1


def test_act_identity_fixes():
    a = IntegerAutomorphism(((1, 0), (0, 1)))
    assert act(a, I2).rows == I2.rows


def test_act_matches_evaluation():
    a = IntegerAutomorphism(((1, 1), (0, 1)))
    assert flag_sign(act(a, I2), (0, 1)) == flag_sign(I2, (1, 1)) == 1


@settings(max_examples=60, deadline=None)
@given(vectors)
def test_act_composition_law(v):
    a = IntegerAutomorphism(((1, 1), (0, 1)))
    b = IntegerAutomorphism(((0, 1), (-1, 0)))
    ab = IntegerAutomorphism(tuple(
        tuple(sum(a.entries[i][k] * b.entries[k][j] for k in range(2)) for j in range(2))
        for i in range(2)))
    assert flag_sign(act(ab, I2), v) == flag_sign(act(b, act(a, I2)), v)


def test_semantic_equality():
    scaled = FlagOrdering([[2, 0], [3, 1]])
    assert scaled.same_ordering(I2)
    assert not FlagOrdering([[0, 1], [1, 0]]).same_ordering(I2)


def test_gl_witness_negative_identity():
    a = IntegerAutomorphism(((-1, 0), (0, -1)))
    flag, v = gl_witness(a)
    assert flag.rows == I2.rows
    assert flag_sign(flag, v) != flag_sign(flag, a.apply(v))


def test_gl_witness_transvection():
    a = IntegerAutomorphism(((1, 1), (0, 1)))
    flag, v = gl_witness(a)
    assert flag.rows == I2.rows
    assert v == (-1, 1)
    assert flag_sign(flag, v) == -1
    assert flag_sign(flag, a.apply(v)) == 1


def test_gl_witness_permutation():
    a = IntegerAutomorphism(((0, 1), (1, 0)))
    flag, v = gl_witness(a)
    assert flag_sign(flag, v) != flag_sign(flag, a.apply(v))


def test_gl_witness_rejects_identity():
    with pytest.raises(IsIdentity):
        gl_witness(IntegerAutomorphism(((1, 0), (0, 1))))


def test_gl_witness_lower_unipotent_needs_constructed_flag():
    # lower-triangular unipotent matrices preserve the lexicographic ordering,
    # so the witness flag cannot be the identity
    a = IntegerAutomorphism(((1, 0), (1, 1)))
    flag, v = gl_witness(a)
    assert flag_sign(flag, v) != flag_sign(flag, a.apply(v))


def test_realize_flag_examples():
    flag = realize_flag([(1, 0), (-1, 1)])
    assert flag_sign(flag, (1, 0)) == 1
    assert flag_sign(flag, (-1, 1)) == 1
    flag = realize_flag([(2, 1)])
    assert flag_sign(flag, (2, 1)) == 1
    with pytest.raises(NoCone):
        realize_flag([(1, 0), (-1, 0)])


def test_flag_json_round_trip():
    f = FlagOrdering([["1/2", 1], [0, "-3"]])
    again = FlagOrdering.from_json(f.to_json())
    assert again.rows == f.rows
