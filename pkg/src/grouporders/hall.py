"""Basic commutators and exact coordinates on lower-central quotients.

The basis of basic commutators used everywhere is the Lyndon basis: one
bracket per Lyndon word over the generator alphabet, bracketed along the
standard factorization (split at the least proper suffix).  Its weight-i
layer is a basis of the degree-i homogeneous Lie elements, and the class of
a depth-i word inside the i-th lower-central quotient is read off by
decomposing the degree-i part of its series image over the layer.

Bases, bracket words and the exact decomposition operators are cached per
(rank, weight); everything they return is immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import exactlin
from .errors import DepthExceedsCap, LevelExceedsCap
from .series import Monomial, lcs_depth, magnus
from .words import Endomorphism, Word, commutator, generator

# A bracket is either a generator index or a pair of brackets.
Bracket = int | tuple


def _is_lyndon(w: tuple[int, ...]) -> bool:
    return bool(w) and all(w < w[i:] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def lyndon_words(rank: int, weight: int) -> tuple[tuple[int, ...], ...]:
    """All Lyndon words of the given length, lexicographically ordered."""
    return tuple(w for w in product(range(1, rank + 1), repeat=weight)
                 if _is_lyndon(w))


@lru_cache(maxsize=None)
def basis_layer(rank: int, weight: int) -> tuple[Bracket, ...]:
    """Basic commutators of one weight, ordered like their Lyndon words."""
    return tuple(_bracketing(w) for w in lyndon_words(rank, weight))


def _bracketing(w: tuple[int, ...]) -> Bracket:
    if len(w) == 1:
        return w[0]
    # standard factorization: split before the least proper suffix
    split = min(range(1, len(w)), key=lambda i: w[i:])
    return (_bracketing(w[:split]), _bracketing(w[split:]))


def layer_rank(rank: int, weight: int) -> int:
    return len(lyndon_words(rank, weight))


def bracket_weight(b: Bracket) -> int:
    if isinstance(b, int):
        return 1
    return bracket_weight(b[0]) + bracket_weight(b[1])


def bracket_word(rank: int, b: Bracket) -> Word:
    """The group commutator word spelled by a bracket."""
    if isinstance(b, int):
        return generator(rank, b)
    return commutator(bracket_word(rank, b[0]), bracket_word(rank, b[1]))


@lru_cache(maxsize=None)
def bracket_expansion(b: Bracket) -> dict[Monomial, int]:
    """Expansion of a bracket in the free associative ring, [u,v] = uv - vu."""
    if isinstance(b, int):
        return {(b,): 1}
    left = bracket_expansion(b[0])
    right = bracket_expansion(b[1])
    out: dict[Monomial, int] = {}
    for m1, c1 in left.items():
        for m2, c2 in right.items():
            out[m1 + m2] = out.get(m1 + m2, 0) + c1 * c2
            out[m2 + m1] = out.get(m2 + m1, 0) - c1 * c2
    return {m: c for m, c in out.items() if c != 0}


def bracket_vector(rank: int, b: Bracket) -> tuple[Fraction, ...]:
    """Expansion of a bracket as a dense vector over its degree's monomials."""
    weight = bracket_weight(b)
    expansion = bracket_expansion(b)
    return tuple(Fraction(expansion.get(m, 0))
                 for m in monomials(rank, weight))


@lru_cache(maxsize=None)
def monomials(rank: int, degree: int) -> tuple[Monomial, ...]:
    return tuple(product(range(1, rank + 1), repeat=degree))


@lru_cache(maxsize=None)
def _decomposition_operator(rank: int, weight: int) -> tuple[tuple[Fraction, ...], ...]:
    """Left inverse of the expansion matrix of the weight layer.

    Applied to the degree-``weight`` coefficients of a series it returns the
    basis coordinates; the result is only meaningful (and is verified by
    callers) when those coefficients form a Lie element.
    """
    layer = basis_layer(rank, weight)
    mons = monomials(rank, weight)
    columns = [bracket_expansion(b) for b in layer]
    a_rows = [tuple(Fraction(col.get(m, 0)) for col in columns) for m in mons]
    k = len(layer)
    aug = [row + tuple(Fraction(1 if i == j else 0) for j in range(len(mons)))
           for i, row in enumerate(a_rows)]
    reduced, pivots = exactlin.rref(aug)
    assert pivots[:k] == tuple(range(k)), "expansion matrix must have full column rank"
    return tuple(reduced[i][k:] for i in range(k))


def decompose_lie(rank: int, weight: int,
                  part: dict[Monomial, int]) -> tuple[int, ...] | None:
    """Coordinates of a homogeneous degree part over the basis layer.

    Returns None when the part is not a Lie element (the candidate produced
    by the left inverse is checked against the input exactly).
    """
    mons = monomials(rank, weight)
    h = tuple(Fraction(part.get(m, 0)) for m in mons)
    op = _decomposition_operator(rank, weight)
    coords = tuple(exactlin.dot(row, h) for row in op)
    layer = basis_layer(rank, weight)
    recon: dict[Monomial, Fraction] = {}
    for c, b in zip(coords, layer):
        if c == 0:
            continue
        for m, x in bracket_expansion(b).items():
            recon[m] = recon.get(m, Fraction(0)) + c * x
    for m in mons:
        if recon.get(m, Fraction(0)) != part.get(m, 0):
            return None
    assert all(c.denominator == 1 for c in coords)
    return tuple(int(c) for c in coords)


def coords_at_level(w: Word, level: int) -> tuple[int, ...]:
    """Class of a word of depth >= level inside the level-th quotient.

    Zero vector when the word sits strictly deeper.
    """
    series = magnus(w, level)
    depth = series.min_degree()
    if depth is not None and depth < level:
        raise DepthExceedsCap(
            f"word has depth {depth} < requested level {level}")
    if depth is None:
        return tuple(0 for _ in range(layer_rank(w.rank, level)))
    coords = decompose_lie(w.rank, level, series.graded_part(level))
    assert coords is not None, "leading part of a group element must be Lie"
    return coords


def leading_coords(w: Word, cap: int) -> tuple[int, tuple[int, ...]]:
    """(depth, basis coordinates at that depth) for a word visible at cap."""
    depth = lcs_depth(w, cap)
    if depth is None:
        raise DepthExceedsCap(f"word is trivial in every quotient up to class {cap}")
    return depth, coords_at_level(w, depth)


def induced_matrix(phi: Endomorphism, level: int, cap: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Matrix of the induced map on the level-th lower-central quotient.

    Columns are the coordinates of the images of the weight-``level`` basic
    commutators, so the matrix acts on coordinate columns from the left.
    """
    if cap is not None and level > cap:
        raise LevelExceedsCap(f"level {level} exceeds cap {cap}")
    layer = basis_layer(phi.rank, level)
    columns = []
    for b in layer:
        image = phi.apply(bracket_word(phi.rank, b))
        columns.append(coords_at_level(image, level))
    return tuple(tuple(col[i] for col in columns) for i in range(len(layer)))


def identity_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
