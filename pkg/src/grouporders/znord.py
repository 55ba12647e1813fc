"""Flag orderings on Z^n and the GL_n(Z) action on them.

A flag ordering is stored as a full-rank square rational matrix; the sign of
an integer vector is the sign of the first nonzero entry of its image.  The
matrix encodes both the flag of hyperplanes (successive partial kernels) and
the choice of positive half-space at each stage.  Irrational hyperplanes are
not representable here, deliberately: every witness this package produces
can be realized with a rational flag.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import exactlin
from .errors import DimensionMismatch, IsIdentity, NoCone
from .exactlin import Matrix, Vector, classify_cone, mat_vec, matrix, vector


@dataclass(frozen=True)
class FlagOrdering:
    """Full-rank n x n rational matrix, outermost functional first."""

    rows: Matrix

    def __post_init__(self):
        rows = matrix(self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("flag matrix must be square and nonempty")
        if exactlin.rank(rows) != n:
            raise DimensionMismatch("flag matrix must have full rank")

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def sign(self, v) -> int:
        return flag_sign(self, v)

    def canonical_rows(self) -> Matrix:
        """Canonical representative of the sign function this matrix defines.

        Positive row scaling and adding multiples of earlier rows to later
        rows never change any sign, so reducing later rows at earlier pivots
        and normalizing each leading entry to +-1 picks one matrix per
        ordering.
        """
        rows = [list(r) for r in self.rows]
        n = len(rows)
        for i in range(n):
            pivot = next(c for c in range(n) if rows[i][c] != 0)
            lead = abs(rows[i][pivot])
            rows[i] = [x / lead for x in rows[i]]
            for j in range(i + 1, n):
                if rows[j][pivot] != 0:
                    f = rows[j][pivot] / rows[i][pivot]
                    rows[j] = [a - f * b for a, b in zip(rows[j], rows[i])]
        return tuple(tuple(r) for r in rows)

    def same_ordering(self, other: "FlagOrdering") -> bool:
        return self.canonical_rows() == other.canonical_rows()

    def to_json(self) -> dict:
        return {
            "n": self.dimension,
            "rows": [[str(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data) -> "FlagOrdering":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(matrix(data["rows"]))

    @classmethod
    def identity(cls, n: int) -> "FlagOrdering":
        return cls(tuple(tuple(Fraction(1 if i == j else 0) for j in range(n))
                         for i in range(n)))


@dataclass(frozen=True)
class IntegerAutomorphism:
    """Square integer matrix with determinant +-1."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("automorphism matrix must be square")
        if abs(_int_det(rows)) != 1:
            raise DimensionMismatch("automorphism matrix must have det +-1")

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def is_identity(self) -> bool:
        n = self.dimension
        return all(self.entries[i][j] == (1 if i == j else 0)
                   for i in range(n) for j in range(n))

    def apply(self, v) -> tuple[int, ...]:
        v = tuple(int(x) for x in v)
        if len(v) != self.dimension:
            raise DimensionMismatch("vector dimension mismatch")
        return tuple(sum(r * x for r, x in zip(row, v)) for row in self.entries)


def _int_det(rows) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def flag_sign(f: FlagOrdering, v) -> int:
    """-1, 0 or +1; zero only for the zero vector."""
    v = vector(v)
    if len(v) != f.dimension:
        raise DimensionMismatch(
            f"vector of dimension {len(v)} under a flag of dimension {f.dimension}")
    for value in mat_vec(f.rows, v):
        if value > 0:
            return 1
        if value < 0:
            return -1
    return 0


def opposite(f: FlagOrdering) -> FlagOrdering:
    return FlagOrdering(tuple(tuple(-x for x in row) for row in f.rows))


def act(a: IntegerAutomorphism, f: FlagOrdering) -> FlagOrdering:
    """Pullback ordering: the returned flag signs v the way f signs A.v."""
    if a.dimension != f.dimension:
        raise DimensionMismatch("matrix and flag dimensions differ")
    am = matrix(a.entries)
    return FlagOrdering(exactlin.mat_mul(f.rows, am))


def _ball_vectors(n: int, radius: int):
    """Nonzero integer vectors grouped by max-norm shell, lexicographic."""
    for r in range(1, radius + 1):
        for v in product(range(-r, r + 1), repeat=n):
            if max(abs(x) for x in v) == r:
                yield v


def _complete_flag(first_rows: list[Vector], n: int) -> FlagOrdering:
    rows = list(first_rows)
    for i in range(n):
        candidate = tuple(Fraction(1 if j == i else 0) for j in range(n))
        if exactlin.rank(rows + [candidate]) > exactlin.rank(rows):
            rows.append(candidate)
        if len(rows) == n:
            break
    return FlagOrdering(tuple(rows))


def realize_flag(positives, dimension: int | None = None) -> FlagOrdering:
    """A flag ordering making every input vector positive.

    Succeeds exactly when no nonnegative combination of the inputs vanishes;
    otherwise raises :class:`NoCone` carrying the certificate.  The outermost
    functional is the strict half-space found by :func:`classify_cone` and
    the flag is completed with standard basis rows.
    """
    positives = [vector(v) for v in positives]
    if not positives:
        if dimension is None:
            raise DimensionMismatch("dimension required for an empty input")
        return FlagOrdering.identity(dimension)
    cert = classify_cone(positives)
    if isinstance(cert, exactlin.ZeroCombo):
        raise NoCone("inputs admit a vanishing nonnegative combination", cert)
    n = len(positives[0])
    flag = _complete_flag([cert.functional], n)
    assert all(flag_sign(flag, v) == 1 for v in positives)
    return flag


def gl_witness(a: IntegerAutomorphism) -> tuple[FlagOrdering, tuple[int, ...]]:
    """A flag ordering and vector on which ``a`` visibly changes signs.

    Search order: the lexicographic ordering (identity flag) against small
    vectors first, then a constructed flag making some ``v`` positive and
    ``A.v`` negative.  The first hit is returned; no canonicity is claimed.
    """
    if a.is_identity():
        raise IsIdentity("the identity matrix preserves every ordering")
    n = a.dimension
    identity = FlagOrdering.identity(n)
    for v in _ball_vectors(n, 2):
        if flag_sign(identity, v) != flag_sign(identity, a.apply(v)):
            return identity, v
    for v in _ball_vectors(n, 2):
        image = a.apply(v)
        # skip v with A.v a positive multiple of v: no cone separates those
        if _is_positive_multiple(image, v):
            continue
        flag = realize_flag([v, tuple(-x for x in image)])
        assert flag_sign(flag, v) == 1 and flag_sign(flag, image) == -1
        return flag, v
    raise AssertionError("unreachable: every non-identity matrix has a radius-1 witness")


def _is_positive_multiple(u, v) -> bool:
    ratio = None
    for y, x in zip(u, v):
        if (x == 0) != (y == 0):
            return False
        if x != 0:
            r = Fraction(y, x)
            if r <= 0:
                return False
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
    return ratio is not None
