"""Exact rational linear algebra and cone-separation certificates.

Vectors are tuples of ``fractions.Fraction`` (always in lowest terms with a
positive denominator, which the stdlib guarantees), matrices are tuples of
row vectors.  Everything here is exact; there is no floating point anywhere
because every downstream consumer turns these numbers into *signs*.

The one nontrivial routine is :func:`classify_cone`.  Given nonzero vectors
``v_1 .. v_m`` it produces exactly one of two self-verifying certificates:

* ``ZeroCombo(a)`` -- nonnegative integers, not all zero, with
  ``sum a_i v_i = 0``; equivalently the origin lies in the convex hull of
  the ``v_i``, so no ordering can make all of them positive.
* ``Halfspace(f)`` -- a functional with ``f . v_i > 0`` for every ``i``.

These alternatives are mutually exclusive (a strictly positive functional
rules out any nonnegative vanishing combination and vice versa), so the
dichotomy is decided by searching for a zero combination first and solving
for a strict functional only when none exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EmptyInput, NoSeparator, ZeroVectorInput

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def vector(entries: Iterable) -> Vector:
    """Coerce ints / strings like ``"3/4"`` / Fractions to an exact vector."""
    return tuple(Fraction(e) for e in entries)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    rows = tuple(vector(r) for r in rows)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionMismatch("matrix rows must have equal length")
    return rows


def format_rational(x: Fraction) -> str:
    return str(x)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"dot of lengths {len(u)} and {len(v)}")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def mat_vec(m: Matrix, v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def is_zero_vector(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def scale_to_integers(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest positive multiple of ``v`` with integer entries and gcd 1."""
    v = vector(v)
    if is_zero_vector(v):
        return tuple(0 for _ in v)
    lcm = 1
    for x in v:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints)


def rref(rows: Iterable[Iterable]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns, exact."""
    m = [list(vector(r)) for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m), tuple(pivots)


def rank(rows: Iterable[Iterable]) -> int:
    return len(rref(rows)[1])


def kernel_basis(m: Iterable[Iterable]) -> list[Vector]:
    """Exact basis of the right null space of ``m``.

    Empty iff the matrix has full column rank.  Basis vectors carry a 1 in
    their free column, so the output is canonical for a given input.
    """
    m = matrix(m)
    if not m:
        raise EmptyInput("kernel_basis of an empty matrix")
    ncols = len(m[0])
    reduced, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            v[pc] = -reduced[row_idx][fc]
        basis.append(tuple(v))
    return basis


def solve_linear(a: Iterable[Iterable], b: Sequence) -> Vector | None:
    """One exact solution of ``a x = b``, or None if inconsistent."""
    a = matrix(a)
    b = vector(b)
    if len(a) != len(b):
        raise DimensionMismatch("solve_linear: row count must match rhs")
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row_idx, pc in enumerate(pivots):
        x[pc] = reduced[row_idx][ncols]
    return tuple(x)


@dataclass(frozen=True)
class Halfspace:
    """Functional with ``functional . v > 0`` for every classified vector."""

    functional: Vector

    def holds_for(self, vectors: Sequence[Vector]) -> bool:
        if is_zero_vector(self.functional):
            return False
        return all(dot(self.functional, v) >= 0 for v in vectors)

    def strict_for(self, vectors: Sequence[Vector]) -> bool:
        return all(dot(self.functional, v) > 0 for v in vectors)


@dataclass(frozen=True)
class ZeroCombo:
    """Nonnegative integer coefficients, not all zero, summing the input to 0."""

    coefficients: tuple[int, ...]

    def holds_for(self, vectors: Sequence[Vector]) -> bool:
        if len(self.coefficients) != len(vectors):
            return False
        if any(c < 0 for c in self.coefficients) or all(c == 0 for c in self.coefficients):
            return False
        n = len(vectors[0])
        total = [Fraction(0)] * n
        for c, v in zip(self.coefficients, vectors):
            for i in range(n):
                total[i] += c * v[i]
        return is_zero_vector(total)


ConeCertificate = Halfspace | ZeroCombo


def _validate_cone_input(vs: Sequence) -> tuple[Vector, ...]:
    vs = tuple(vector(v) for v in vs)
    if not vs:
        raise EmptyInput("classify_cone needs at least one vector")
    n = len(vs[0])
    for v in vs:
        if len(v) != n:
            raise DimensionMismatch("cone vectors must share a dimension")
        if is_zero_vector(v):
            raise ZeroVectorInput("cone vectors must be nonzero")
    return vs


def _find_zero_combo(vs: Sequence[Vector]) -> ZeroCombo | None:
    """Search for a minimal positively-dependent subset (a circuit).

    Any nonnegative vanishing combination contains one whose support has a
    one-dimensional kernel with a strictly signed generator, so scanning
    subsets in (size, index) order finds a certificate iff one exists and
    makes the output canonical.
    """
    m = len(vs)
    dim = len(vs[0])
    max_size = min(m, rank(vs) + 1)
    for size in range(2, max_size + 1):
        for subset in itertools.combinations(range(m), size):
            cols = tuple(zip(*(vs[i] for i in subset)))  # dim x size
            ker = kernel_basis(cols) if cols else []
            if len(ker) != 1:
                continue
            gen = ker[0]
            if any(x == 0 for x in gen):
                continue
            if all(x > 0 for x in gen) or all(x < 0 for x in gen):
                ints = scale_to_integers(gen)
                if ints[0] < 0:
                    ints = tuple(-x for x in ints)
                coeffs = [0] * m
                for idx, c in zip(subset, ints):
                    coeffs[idx] = c
                combo = ZeroCombo(tuple(coeffs))
                assert combo.holds_for(vs)
                return combo
    return None


# Fourier-Motzkin feasibility for systems of inequalities sum(c_i x_i) >= b.


def _fm_eliminate(constraints: list[tuple[tuple[Fraction, ...], Fraction]], var: int):
    lowers, uppers, rest = [], [], []
    for coeffs, b in constraints:
        c = coeffs[var]
        if c > 0:
            lowers.append((coeffs, b))
        elif c < 0:
            uppers.append((coeffs, b))
        else:
            rest.append((coeffs, b))
    for lc, lb in lowers:
        for uc, ub in uppers:
            # combine x >= (lb - lrest)/lc with x <= (ub - urest)/uc
            scale_l = -uc[var]
            scale_u = lc[var]
            coeffs = tuple(scale_l * a + scale_u * b2 for a, b2 in zip(lc, uc))
            rest.append((coeffs[:var] + (Fraction(0),) + coeffs[var + 1:],
                         scale_l * lb + scale_u * ub))
    seen = set()
    out = []
    for coeffs, b in rest:
        key = (coeffs, b)
        if key not in seen:
            seen.add(key)
            out.append((coeffs, b))
    return out


def solve_inequalities(constraints: list[tuple[Vector, Fraction]], nvars: int) -> Vector | None:
    """A point satisfying every ``coeffs . x >= b``, or None.

    Variables are eliminated from the last index down, then assigned back in
    ascending order, taking the max lower bound (else min upper bound, else
    zero).  The procedure is deterministic and seed-free.
    """
    systems = [list(constraints)]
    for var in range(nvars - 1, -1, -1):
        systems.append(_fm_eliminate(systems[-1], var))
    final = systems[-1]
    if any(b > 0 for _, b in final):
        return None
    values: list[Fraction] = [Fraction(0)] * nvars
    for var in range(nvars):
        system = systems[nvars - 1 - var]
        lowers, uppers = [], []
        for coeffs, b in system:
            c = coeffs[var]
            if c == 0:
                continue
            residual = b - sum(coeffs[i] * values[i] for i in range(var))
            bound = residual / c
            (lowers if c > 0 else uppers).append(bound)
        if lowers:
            values[var] = max(lowers)
        elif uppers:
            values[var] = min(uppers)
        else:
            values[var] = Fraction(0)
    return tuple(values)


def classify_cone(vs: Sequence) -> ConeCertificate:
    """Decide whether the vectors admit a vanishing nonnegative combination.

    Returns a verified ``ZeroCombo`` when one exists, otherwise a verified
    strict ``Halfspace``.  One of the two always exists.
    """
    vs = _validate_cone_input(vs)
    combo = _find_zero_combo(vs)
    if combo is not None:
        return combo
    n = len(vs[0])
    constraints = [(v, Fraction(1)) for v in vs]
    f = solve_inequalities(constraints, n)
    assert f is not None, "no zero combination and no strict functional"
    cert = Halfspace(f)
    assert cert.strict_for(vs)
    return cert


def strict_separator(pos: Sequence, neg: Sequence) -> Vector:
    """Functional ``f`` with ``f.p > 0`` on pos and ``f.q < 0`` on neg.

    Raises :class:`NoSeparator` when the two sets cannot be strictly
    separated; the first functional under the deterministic elimination
    order is returned otherwise.
    """
    pos = _validate_cone_input(pos)
    neg = _validate_cone_input(neg)
    n = len(pos[0])
    if len(neg[0]) != n:
        raise DimensionMismatch("pos and neg must share a dimension")
    constraints = [(p, Fraction(1)) for p in pos]
    constraints += [(tuple(-x for x in q), Fraction(1)) for q in neg]
    f = solve_inequalities(constraints, n)
    if f is None:
        raise NoSeparator(f"no functional strictly separates {pos} from {neg}")
    assert all(dot(f, p) > 0 for p in pos) and all(dot(f, q) < 0 for q in neg)
    return f
