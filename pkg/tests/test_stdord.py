import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouporders.errors import CommonRoot, DepthExceedsCap, EmptyWord
from grouporders.report import random_standard_ordering
from grouporders.stdord import (StandardOrdering, TwistedOrdering, ball_distance,
                                compare, identity_levels, identity_ordering,
                                ordering_from_json, pullback, separate, std_sign,
                                verify_cone_axioms)
from grouporders.words import ball_words, commutator, generator, parse_word, word
from grouporders.znord import opposite

LEX = identity_ordering(2, 5)


def test_std_sign_examples():
    assert std_sign(LEX, parse_word("x1", 2)) == 1
    assert std_sign(LEX, parse_word("x1^-1 x2", 2)) == -1
    assert std_sign(LEX, parse_word("x1 x2 x1^-1 x2^-1", 2)) == 1


def test_std_sign_rejects_identity_and_deep_words():
    with pytest.raises(EmptyWord):
        std_sign(LEX, parse_word("1", 2))
    shallow = identity_ordering(2, 1)
    with pytest.raises(DepthExceedsCap):
        std_sign(shallow, parse_word("x1 x2 x1^-1 x2^-1", 2))


def test_compare():
    x1 = parse_word("x1", 2)
    assert compare(LEX, x1, x1) == 0
    assert compare(LEX, x1, parse_word("x1 x2", 2)) == -1
    assert compare(LEX, parse_word("x1 x2", 2), x1) == 1


letters = st.integers(-2, 2).filter(lambda x: x != 0)


@settings(max_examples=60, deadline=None)
@given(st.lists(letters, max_size=5), st.lists(letters, max_size=5))
def test_compare_antisymmetric(a, b):
    g, h = word(2, a), word(2, b)
    assert compare(LEX, g, h) == -compare(LEX, h, g)


def test_opposite_negates_every_sign():
    opp = LEX.opposite()
    for w in ball_words(2, 3):
        assert opp.sign(w) == -LEX.sign(w)


def test_pullback_concatenates_levels():
    levels = identity_levels(2, 5)
    assert pullback(levels[:2], levels[2:]).levels == levels


def test_pullback_quotient_data_decides_surviving_words():
    levels = identity_levels(2, 5)
    tail_a = levels[1:]
    tail_b = (opposite(levels[1]),) + levels[2:]
    s_a = pullback(levels[:1], tail_a)
    s_b = pullback(levels[:1], tail_b)
    for w in ball_words(2, 3):
        # whole ball has depth 1: the shared quotient level decides everything
        assert s_a.sign(w) == s_b.sign(w)
    t = commutator(generator(2, 1), generator(2, 2))
    assert s_a.sign(t) == 1 and s_b.sign(t) == -1


def test_cone_axioms_identity_ordering():
    result = verify_cone_axioms(LEX, 3)
    assert result.passed
    assert result.skipped_words == 0 and result.skipped_pairs == 0


def test_cone_axioms_random_orderings():
    rng = random.Random(7)
    for _ in range(3):
        ordering = random_standard_ordering(2, 5, rng)
        assert verify_cone_axioms(ordering, 3).passed


def test_separate_distinct_generators():
    ordering = separate(parse_word("x1", 2), parse_word("x2", 2))
    assert isinstance(ordering, StandardOrdering)
    first_row = ordering.levels[0].rows[0]
    assert first_row[0] > 0 > first_row[1]


def test_separate_common_root():
    with pytest.raises(CommonRoot) as info:
        separate(parse_word("x1^2", 2), parse_word("x1", 2))
    assert info.value.powers == (1, 2)


def test_separate_cyclic_rotation_needs_twist():
    g = parse_word("x1 x2", 2)
    k = parse_word("x2 x1", 2)
    ordering = separate(g, k)
    assert isinstance(ordering, TwistedOrdering)
    assert ordering.twist_degree == 2
    assert ordering.sign(g) == 1 and ordering.sign(k) == -1


def test_separate_conjugate_pair():
    g = parse_word("x2", 2)
    k = parse_word("x1 x2 x1^-1", 2)
    ordering = separate(k, g)
    assert ordering.sign(k) == 1 and ordering.sign(g) == -1


def test_separate_unequal_depths():
    g = parse_word("x1", 2)
    k = commutator(generator(2, 1), generator(2, 2))
    ordering = separate(g, k)
    assert isinstance(ordering, StandardOrdering)
    assert ordering.sign(g) == 1 and ordering.sign(k) == -1


def test_separate_deep_twist():
    # difference of the pair sits at depth 3: exercises the j = 2d + 1 twist
    g = parse_word("x1", 2)
    c3 = commutator(commutator(generator(2, 1), generator(2, 2)), generator(2, 2))
    k = g * c3
    ordering = separate(g, k)
    assert isinstance(ordering, TwistedOrdering)
    assert ordering.twist_degree == 3
    assert ordering.sign(g) == 1 and ordering.sign(k) == -1


def test_twisted_ordering_is_left_order_but_not_bi_invariant():
    ordering = separate(parse_word("x1 x2", 2), parse_word("x2 x1", 2))
    result = verify_cone_axioms(ordering, 3)
    assert result.left_order_ok
    assert not result.conjugation_ok


def test_ball_distance_basics():
    assert ball_distance(LEX, LEX, 4) == 4
    assert ball_distance(LEX, LEX.opposite(), 4) == 0


def test_ball_distance_level_three_flip():
    # shortest depth-3 word in rank 2 has length 8 (checked exhaustively),
    # so flipping the level-3 flag is invisible through radius 7
    levels = list(identity_levels(2, 5))
    levels[2] = opposite(levels[2])
    flipped = StandardOrdering(2, 5, tuple(levels))
    assert ball_distance(LEX, flipped, 8) == 7


def test_ordering_json_round_trip():
    data = LEX.to_json()
    assert data["class"] == 5
    again = ordering_from_json(data)
    assert again == LEX
    twisted = separate(parse_word("x1 x2", 2), parse_word("x2 x1", 2))
    again = ordering_from_json(twisted.to_json())
    for w in ball_words(2, 3):
        assert again.sign(w) == twisted.sign(w)
