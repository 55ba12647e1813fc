from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouporders.errors import DepthExceedsCap
from grouporders.hall import (basis_layer, bracket_expansion, bracket_word,
                              coords_at_level, identity_matrix, induced_matrix,
                              layer_rank, leading_coords, lyndon_words)
from grouporders.series import lcs_depth
from grouporders.words import (Endomorphism, commutator, generator, parse_endomorphism,
                               parse_word, word)


def _rotation_minimal_count(alphabet: int, length: int) -> int:
    # independent oracle: strings strictly smaller than all proper rotations
    count = 0
    for s in product(range(1, alphabet + 1), repeat=length):
        if all(s < s[i:] + s[:i] for i in range(1, length)):
            count += 1
    return count


@pytest.mark.parametrize("rank,expected", [
    (2, [2, 1, 2, 3, 6]),
    (3, [3, 3, 8, 18]),
])
def test_layer_ranks_match_necklace_counts(rank, expected):
    for weight, target in enumerate(expected, start=1):
        assert layer_rank(rank, weight) == target
        assert _rotation_minimal_count(rank, weight) == target


def test_weight_two_basis_is_bracket_of_generators():
    (b,) = basis_layer(2, 2)
    assert b == (1, 2)
    assert bracket_expansion(b) == {(1, 2): 1, (2, 1): -1}
    assert bracket_word(2, b) == commutator(generator(2, 1), generator(2, 2))


def test_bracket_words_have_their_weight_as_depth():
    for weight in range(1, 5):
        for b in basis_layer(2, weight):
            assert lcs_depth(bracket_word(2, b), 5) == weight


def test_leading_coords_abelianization():
    assert leading_coords(parse_word("x1 x2^2", 2), 5) == (1, (1, 2))


def test_leading_coords_of_commutators():
    t = parse_word("x1 x2 x1^-1 x2^-1", 2)
    assert leading_coords(t, 5) == (2, (1,))
    assert leading_coords(t.inverse(), 5) == (2, (-1,))


def test_leading_coords_depth_cap():
    t = commutator(generator(2, 1), generator(2, 2))
    with pytest.raises(DepthExceedsCap):
        leading_coords(t, 1)


def test_coords_at_level_zero_for_deeper_words():
    t = commutator(generator(2, 1), generator(2, 2))
    deep = commutator(t, generator(2, 1))  # depth 3, so trivial one level up
    assert coords_at_level(deep, 2) == (0,)
    with pytest.raises(DepthExceedsCap):
        coords_at_level(t, 3)


def test_basis_coordinates_are_unit_vectors():
    for weight in range(1, 5):
        layer = basis_layer(2, weight)
        for i, b in enumerate(layer):
            coords = coords_at_level(bracket_word(2, b), weight)
            assert coords == tuple(1 if j == i else 0 for j in range(len(layer)))


letters = st.integers(-2, 2).filter(lambda x: x != 0)


@settings(max_examples=60, deadline=None)
@given(st.lists(letters, min_size=1, max_size=6), st.lists(letters, min_size=1, max_size=6))
def test_leading_coords_additive_at_fixed_depth(a, b):
    u, v = word(2, a), word(2, b)
    if u.is_identity() or v.is_identity() or (u * v).is_identity():
        return
    cap = 5
    du, dv = lcs_depth(u, cap), lcs_depth(v, cap)
    if du is None or dv is None or du != dv:
        return
    d, cu = leading_coords(u, cap)
    _, cv = leading_coords(v, cap)
    total = tuple(x + y for x, y in zip(cu, cv))
    if any(total):
        assert leading_coords(u * v, cap) == (d, total)


def test_induced_matrix_identity():
    for level in range(1, 4):
        assert induced_matrix(Endomorphism.identity(2), level) == \
            identity_matrix(layer_rank(2, level))


def test_induced_matrix_transvection_level_one():
    phi = parse_endomorphism("x1 -> x1 x2 ; x2 -> x2", 2)
    assert induced_matrix(phi, 1) == ((1, 0), (1, 1))


def test_induced_matrix_swap_level_two():
    phi = parse_endomorphism("x1 -> x2 ; x2 -> x1", 2)
    assert induced_matrix(phi, 2) == ((-1,),)


def test_induced_matrix_functorial():
    phi = parse_endomorphism("x1 -> x1 x2", 2)
    psi = parse_endomorphism("x1 -> x2 ; x2 -> x1", 2)
    for level in (1, 2, 3):
        m_phi = induced_matrix(phi, level)
        m_psi = induced_matrix(psi, level)
        m_comp = induced_matrix(phi.compose(psi), level)
        n = len(m_phi)
        product_matrix = tuple(
            tuple(sum(m_phi[i][k] * m_psi[k][j] for k in range(n)) for j in range(n))
            for i in range(n))
        assert m_comp == product_matrix


def test_lyndon_words_are_cached_and_ordered():
    assert lyndon_words(2, 3) == ((1, 1, 2), (1, 2, 2))
    assert lyndon_words(2, 3) is lyndon_words(2, 3)
