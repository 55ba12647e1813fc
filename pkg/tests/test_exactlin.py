import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouporders.errors import EmptyInput, NoSeparator, ZeroVectorInput
from grouporders.exactlin import (Halfspace, ZeroCombo, classify_cone, dot,
                                  kernel_basis, matrix, rank, solve_linear,
                                  strict_separator, vector)


def test_kernel_of_identity_is_empty():
    assert kernel_basis([[1, 0], [0, 1]]) == []


def test_kernel_of_single_row():
    (v,) = kernel_basis([[1, 1]])
    assert v[0] * 1 + v[1] * 1 == 0
    assert v != (0, 0)


def test_kernel_two_by_three():
    (v,) = kernel_basis([[1, 0, 1], [0, 1, 1]])
    # proportional to (1, 1, -1)
    scale = v[2] / Fraction(-1)
    assert v == (scale, scale, -scale)
    for row in matrix([[1, 0, 1], [0, 1, 1]]):
        assert dot(row, v) == 0


def test_kernel_count_matches_rank_deficit():
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert len(kernel_basis(m)) == 3 - rank(m)


def test_classify_positive_quadrant():
    cert = classify_cone([(1, 0), (0, 1)])
    assert cert == Halfspace(vector([1, 1]))


def test_classify_antipodal_pair():
    assert classify_cone([(1, 0), (-1, 0)]) == ZeroCombo((1, 1))


def test_classify_triangle():
    vs = [(1, 0), (-1, 1), (0, -1)]
    cert = classify_cone(vs)
    assert cert == ZeroCombo((1, 1, 1))
    # brute-force oracle: some nonnegative combination with small sum vanishes
    assert _brute_zero_combo(vs, 6)


def _brute_zero_combo(vs, max_sum):
    for coeffs in itertools.product(range(max_sum + 1), repeat=len(vs)):
        if not any(coeffs) or sum(coeffs) > max_sum:
            continue
        total = [sum(c * v[i] for c, v in zip(coeffs, vs)) for i in range(len(vs[0]))]
        if all(x == 0 for x in total):
            return True
    return False


def test_classify_rejects_bad_input():
    with pytest.raises(EmptyInput):
        classify_cone([])
    with pytest.raises(ZeroVectorInput):
        classify_cone([(0, 0)])


small_vectors = st.lists(
    st.tuples(st.integers(-5, 5), st.integers(-5, 5)).filter(lambda v: any(v)),
    min_size=1, max_size=5)


@settings(max_examples=150, deadline=None)
@given(small_vectors)
def test_classify_certificate_always_verifies(vs):
    cert = classify_cone(vs)
    rational = [vector(v) for v in vs]
    if isinstance(cert, Halfspace):
        assert cert.strict_for(rational)
        # Gordan: a strict functional excludes any vanishing combination
        assert not _brute_zero_combo(vs, 6)
    else:
        assert cert.holds_for(rational)


def test_separator_antipodal():
    f = strict_separator([(1, 0)], [(-1, 0)])
    assert dot(f, (1, 0)) > 0 > dot(f, (-1, 0))


def test_separator_example_value():
    f = strict_separator([(1, 0)], [(1, 1)])
    assert dot(f, (1, 0)) > 0 > dot(f, (1, 1))
    # deterministic: same output on repeat
    assert f == strict_separator([(1, 0)], [(1, 1)])


def test_separator_rejects_positive_ray():
    with pytest.raises(NoSeparator):
        strict_separator([(1, 0)], [(2, 0)])


@settings(max_examples=100, deadline=None)
@given(small_vectors, small_vectors)
def test_separator_output_verified(pos, neg):
    try:
        f = strict_separator(pos, neg)
    except NoSeparator:
        return
    assert all(dot(f, p) > 0 for p in pos)
    assert all(dot(f, q) < 0 for q in neg)


def test_solve_linear():
    assert solve_linear([[2, 0], [0, 4]], [1, 1]) == (Fraction(1, 2), Fraction(1, 4))
    assert solve_linear([[1, 1], [1, 1]], [0, 1]) is None
