"""Left-invariant orderings of free groups, exact within a class cap.

Two representations are provided.

``StandardOrdering`` carries one flag ordering per lower-central level and
signs a word by its leading basis coordinates.  These orderings are
bi-invariant: conjugation acts trivially on every lower-central quotient,
so conjugate words always receive equal signs.

``TwistedOrdering`` extends the family where bi-invariance is an
obstruction, e.g. to make a word positive and a conjugate of it negative.
It scans a short chain of rational functionals over the graded coefficients
of the series embedding:

    levels below the pivot level d
    -> functionals on level d vanishing on a pivot direction U
    -> a twist row  alpha * (dual of U) + psi(degree-j coefficients)
    -> the dual of U
    -> plain levels d+1 .. cap

Every row is additive on the subgroup where the earlier rows vanish; for
the twist row this is enforced by building ``psi`` orthogonal to all
concatenation products of coefficient vectors that subgroup can produce
(see :func:`_twist_constraints`).  First-nonzero-row sign is therefore a
genuine left-invariant total order on all words of depth <= cap.

Only twists with j <= 2d + 1 are constructed; the constraint space has a
proven description in that range.  Separations that would need more are
reported as :class:`DepthCapExceeded`, never silently approximated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import exactlin, hall
from .errors import (CommonRoot, DepthCapExceeded, DepthExceedsCap, DimensionMismatch,
                     EmptyWord)
from .exactlin import Vector, dot, strict_separator, vector
from .hall import coords_at_level, layer_rank, leading_coords, monomials
from .series import Monomial, lcs_depth, magnus
from .words import Word, ball_words, generator, identity_word
from .znord import FlagOrdering, flag_sign


def _check_levels(rank: int, cap: int, levels: Sequence[FlagOrdering]):
    if len(levels) != cap:
        raise DimensionMismatch(f"expected {cap} level flags, got {len(levels)}")
    for i, flag in enumerate(levels, start=1):
        expected = layer_rank(rank, i)
        if flag.dimension != expected:
            raise DimensionMismatch(
                f"level {i} flag has dimension {flag.dimension}, expected {expected}")


@dataclass(frozen=True)
class StandardOrdering:
    """One flag ordering per lower-central level; bi-invariant by construction."""

    rank: int
    cap: int
    levels: tuple[FlagOrdering, ...]

    def __post_init__(self):
        levels = tuple(self.levels)
        object.__setattr__(self, "levels", levels)
        _check_levels(self.rank, self.cap, levels)

    def sign(self, w: Word) -> int:
        if w.is_identity():
            raise EmptyWord("the identity has no sign")
        depth, coords = leading_coords(w, self.cap)
        value = flag_sign(self.levels[depth - 1], coords)
        assert value != 0
        return value

    def opposite(self) -> "StandardOrdering":
        from .znord import opposite as flag_opposite
        return StandardOrdering(self.rank, self.cap,
                                tuple(flag_opposite(f) for f in self.levels))

    def to_json(self) -> dict:
        return {"rank": self.rank, "class": self.cap,
                "levels": [f.to_json() for f in self.levels]}

    @classmethod
    def from_json(cls, data) -> "StandardOrdering":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["rank"], data["class"],
                   tuple(FlagOrdering.from_json(f) for f in data["levels"]))


def identity_levels(rank: int, cap: int) -> tuple[FlagOrdering, ...]:
    return tuple(FlagOrdering.identity(layer_rank(rank, i))
                 for i in range(1, cap + 1))


def identity_ordering(rank: int, cap: int) -> StandardOrdering:
    """Lexicographic-through-basic-commutators ordering."""
    return StandardOrdering(rank, cap, identity_levels(rank, cap))


@dataclass(frozen=True)
class TwistedOrdering:
    """Left order separating words that share leading coordinates.

    ``pivot_coords`` is a primitive integer vector U on level ``pivot_level``;
    ``psi`` maps degree-``twist_degree`` monomials to rationals and must
    satisfy the orthogonality constraints described in the module docstring
    (the constructor does not re-derive them; use :func:`build_twisted`).
    """

    rank: int
    cap: int
    pivot_level: int
    pivot_coords: tuple[int, ...]
    twist_degree: int
    psi: tuple[tuple[Monomial, Fraction], ...]
    alpha: Fraction
    levels: tuple[FlagOrdering, ...]
    _annihilator: tuple[Vector, ...] = field(default=(), compare=False, repr=False)
    _dual: Vector = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        _check_levels(self.rank, self.cap, tuple(self.levels))
        if not 1 <= self.pivot_level < self.twist_degree <= self.cap:
            raise DimensionMismatch("need 1 <= pivot level < twist degree <= cap")
        u = tuple(int(x) for x in self.pivot_coords)
        if len(u) != layer_rank(self.rank, self.pivot_level) or all(x == 0 for x in u):
            raise DimensionMismatch("pivot coordinates must be a nonzero level vector")
        object.__setattr__(self, "pivot_coords", u)
        object.__setattr__(self, "psi", tuple((tuple(m), Fraction(c))
                                              for m, c in self.psi))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        ann = tuple(exactlin.kernel_basis([vector(u)]))
        object.__setattr__(self, "_annihilator", ann)
        lead = next(i for i, x in enumerate(u) if x != 0)
        dual = tuple(Fraction(1, u[lead]) if i == lead else Fraction(0)
                     for i in range(len(u)))
        object.__setattr__(self, "_dual", dual)

    def _psi_value(self, part: dict[Monomial, int]) -> Fraction:
        return sum((c * part.get(m, 0) for m, c in self.psi), Fraction(0))

    def sign(self, w: Word) -> int:
        if w.is_identity():
            raise EmptyWord("the identity has no sign")
        series = magnus(w, self.cap)
        depth = series.min_degree()
        if depth is None:
            raise DepthExceedsCap(f"word not visible at class cap {self.cap}")
        d = self.pivot_level
        if depth < d:
            coords = hall.decompose_lie(self.rank, depth, series.graded_part(depth))
            assert coords is not None
            return flag_sign(self.levels[depth - 1], coords)
        if depth == d:
            coords = hall.decompose_lie(self.rank, d, series.graded_part(d))
            assert coords is not None
        else:
            coords = tuple(0 for _ in range(layer_rank(self.rank, d)))
        for row in self._annihilator:
            value = dot(row, coords)
            if value != 0:
                return 1 if value > 0 else -1
        s = dot(self._dual, coords)
        rho = self.alpha * s + self._psi_value(series.graded_part(self.twist_degree))
        if rho != 0:
            return 1 if rho > 0 else -1
        if s != 0:
            return 1 if s > 0 else -1
        # remaining words sit strictly below the pivot level: plain level scan
        assert depth > d
        coords = hall.decompose_lie(self.rank, depth, series.graded_part(depth))
        assert coords is not None
        return flag_sign(self.levels[depth - 1], coords)

    def to_json(self) -> dict:
        return {
            "kind": "twisted",
            "rank": self.rank,
            "class": self.cap,
            "pivot_level": self.pivot_level,
            "pivot_coords": list(self.pivot_coords),
            "twist_degree": self.twist_degree,
            "psi": [[list(m), str(c)] for m, c in self.psi],
            "alpha": str(self.alpha),
            "levels": [f.to_json() for f in self.levels],
        }

    @classmethod
    def from_json(cls, data) -> "TwistedOrdering":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            rank=data["rank"], cap=data["class"],
            pivot_level=data["pivot_level"],
            pivot_coords=tuple(data["pivot_coords"]),
            twist_degree=data["twist_degree"],
            psi=tuple((tuple(m), Fraction(c)) for m, c in data["psi"]),
            alpha=Fraction(data["alpha"]),
            levels=tuple(FlagOrdering.from_json(f) for f in data["levels"]),
        )


Ordering = StandardOrdering | TwistedOrdering


def ordering_from_json(data) -> Ordering:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("kind") == "twisted":
        return TwistedOrdering.from_json(data)
    return StandardOrdering.from_json(data)


def std_sign(ordering: Ordering, w: Word) -> int:
    """+1 or -1; raises DepthExceedsCap for words the cap cannot see."""
    return ordering.sign(w)


def compare(ordering: Ordering, g: Word, h: Word) -> int:
    """-1, 0, +1 for g < h, g = h, g > h."""
    q = g.inverse() * h
    if q.is_identity():
        return 0
    return -std_sign(ordering, q)


def pullback(quotient_levels: Sequence[FlagOrdering],
             tail: Sequence[FlagOrdering]) -> StandardOrdering:
    """Ordering agreeing with the quotient data wherever a word survives
    in the corresponding nilpotent quotient, completed by the tail flags."""
    levels = tuple(quotient_levels) + tuple(tail)
    if not levels:
        raise DimensionMismatch("pullback needs at least one level")
    rank = levels[0].dimension
    return StandardOrdering(rank, len(levels), levels)


# ---------------------------------------------------------------------------
# ball verification


@dataclass
class AxiomReport:
    radius: int
    words_checked: int
    totality_ok: bool = True
    antisymmetry_ok: bool = True
    closure_ok: bool = True
    conjugation_ok: bool = True
    skipped_words: int = 0
    skipped_pairs: int = 0
    counterexample: tuple | None = None

    @property
    def left_order_ok(self) -> bool:
        return self.totality_ok and self.antisymmetry_ok and self.closure_ok

    @property
    def passed(self) -> bool:
        return self.left_order_ok and self.conjugation_ok

    def summary(self) -> str:
        flags = [
            ("totality", self.totality_ok),
            ("antisymmetry", self.antisymmetry_ok),
            ("closure", self.closure_ok),
            ("conjugation", self.conjugation_ok),
        ]
        body = ", ".join(f"{name}={'ok' if ok else 'FAIL'}" for name, ok in flags)
        skips = f", skipped {self.skipped_words} words / {self.skipped_pairs} pairs" \
            if self.skipped_words or self.skipped_pairs else ""
        return f"radius {self.radius}: {body}{skips}"


def verify_cone_axioms(ordering: Ordering, radius: int) -> AxiomReport:
    """Exhaustively check the positive-cone axioms on a ball of reduced words.

    Checks totality, antisymmetry, closure of positives under products, and
    conjugation invariance by every generator.  Failures are recorded with a
    counterexample, not raised; words or pairs the class cap cannot decide
    are counted as skipped.
    """
    rank = ordering.rank
    signs: dict[tuple[int, ...], int] = {}
    report = AxiomReport(radius=radius, words_checked=0)
    words = list(ball_words(rank, radius))
    report.words_checked = len(words)
    for w in words:
        try:
            signs[w.letters] = ordering.sign(w)
        except DepthExceedsCap:
            report.skipped_words += 1
    for w in words:
        s = signs.get(w.letters)
        if s is None:
            continue
        if s not in (1, -1):
            report.totality_ok = False
            report.counterexample = report.counterexample or ("totality", str(w))
        s_inv = signs.get(w.inverse().letters)
        if s_inv is not None and s_inv != -s:
            report.antisymmetry_ok = False
            report.counterexample = report.counterexample or ("antisymmetry", str(w))
    positives = [w for w in words if signs.get(w.letters) == 1]
    for u in positives:
        for v in positives:
            p = u * v
            if p.is_identity():
                report.closure_ok = False
                report.counterexample = report.counterexample or ("closure", str(u), str(v))
                continue
            try:
                if ordering.sign(p) != 1:
                    report.closure_ok = False
                    report.counterexample = report.counterexample or \
                        ("closure", str(u), str(v))
            except DepthExceedsCap:
                report.skipped_pairs += 1
    for w in words:
        s = signs.get(w.letters)
        if s is None:
            continue
        for i in range(1, rank + 1):
            conj = w.conjugate_by(generator(rank, i))
            try:
                if ordering.sign(conj) != s:
                    report.conjugation_ok = False
                    report.counterexample = report.counterexample or \
                        ("conjugation", str(w), f"x{i}")
            except DepthExceedsCap:
                report.skipped_pairs += 1
    return report


def ball_distance(o1: Ordering, o2: Ordering, r_max: int) -> int:
    """Largest r <= r_max on whose ball the two orderings agree entirely."""
    if o1.rank != o2.rank:
        raise DimensionMismatch("orderings live on different free groups")
    for r in range(1, r_max + 1):
        for w in ball_words(o1.rank, r):
            if len(w) < r:
                continue
            if o1.sign(w) != o2.sign(w):
                return r - 1
    return r_max


# ---------------------------------------------------------------------------
# separation


def _flag_from_first_row(first_row: Vector, dim: int) -> FlagOrdering:
    rows = [vector(first_row)]
    for i in range(dim):
        candidate = tuple(Fraction(1 if j == i else 0) for j in range(dim))
        if exactlin.rank(rows + [candidate]) > exactlin.rank(rows):
            rows.append(candidate)
        if len(rows) == dim:
            break
    return FlagOrdering(tuple(rows))


def _positive_ratio(u: Sequence[int], v: Sequence[int]) -> Fraction | None:
    """lambda > 0 with v = lambda * u, or None."""
    ratio = None
    for a, b in zip(u, v):
        if (a == 0) != (b == 0):
            return None
        if a != 0:
            r = Fraction(b, a)
            if r <= 0:
                return None
            if ratio is None:
                ratio = r
            elif r != ratio:
                return None
    return ratio


def _word_with_coords(rank: int, level: int, coords: Sequence[int]) -> Word:
    w = identity_word(rank)
    for b, c in zip(hall.basis_layer(rank, level), coords):
        if c:
            w = w * hall.bracket_word(rank, b) ** c
    return w


def _compositions(total: int, min_part: int):
    """All ordered compositions of ``total`` into >= 2 parts >= min_part."""
    def rec(remaining, parts):
        if parts and remaining == 0:
            if len(parts) >= 2:
                yield tuple(parts)
            return
        for p in range(min_part, remaining + 1):
            parts.append(p)
            yield from rec(remaining - p, parts)
            parts.pop()
    yield from rec(total, [])


def _concat_products(parts: Sequence[list[dict[Monomial, Fraction]]]) -> list[dict[Monomial, Fraction]]:
    out = [{(): Fraction(1)}]
    for options in parts:
        new = []
        for acc in out:
            for opt in options:
                prod: dict[Monomial, Fraction] = {}
                for m1, c1 in acc.items():
                    for m2, c2 in opt.items():
                        prod[m1 + m2] = prod.get(m1 + m2, Fraction(0)) + c1 * c2
                new.append(prod)
        out = new
    return out


def _lie_embedding(rank: int, level: int, coords: Sequence[int]) -> dict[Monomial, Fraction]:
    out: dict[Monomial, Fraction] = {}
    for b, c in zip(hall.basis_layer(rank, level), coords):
        if not c:
            continue
        for m, x in hall.bracket_expansion(b).items():
            out[m] = out.get(m, Fraction(0)) + c * x
    return out


def _twist_constraints(rank: int, cap: int, d: int, u0: Sequence[int],
                       j: int) -> list[dict[Monomial, Fraction]]:
    """Spanning vectors psi must annihilate for the twist row to be additive
    (and sign-antisymmetric) on the subgroup with level-d coordinates along u0.

    Degree-j coefficients of products and inverses of such elements deviate
    from additivity by sums of concatenation products over compositions of j
    into parts >= d.  Parts of size d contribute only the direction of u0;
    parts of size d + 1 contribute Lie elements plus the coefficient vectors
    of powers of a word realizing u0 (three powers span the family).  Larger
    parts cannot appear when j <= 2d + 1, the only shape built here.
    """
    if j > 2 * d + 1:
        raise DepthCapExceeded(
            f"twist at pivot level {d} supports degree <= {2 * d + 1}, needed {j}")
    pivot_vec = _lie_embedding(rank, d, u0)
    spans: dict[int, list[dict[Monomial, Fraction]]] = {d: [pivot_vec]}
    if d + 1 <= j - d:
        realizer = _word_with_coords(rank, d, u0)
        samples = []
        for s in (1, 2, 3):
            samples.append({m: Fraction(c) for m, c in
                            magnus(realizer ** s, d + 1).graded_part(d + 1).items()})
        lie = [dict(_lie_embedding(rank, d + 1, row))
               for row in hall.identity_matrix(layer_rank(rank, d + 1))]
        spans[d + 1] = lie + samples
    constraints: list[dict[Monomial, Fraction]] = []
    for comp in _compositions(j, d):
        assert all(p in spans for p in comp)
        constraints.extend(_concat_products([spans[p] for p in comp]))
    return constraints


def build_twisted(rank: int, cap: int, d: int, u0: Sequence[int], j: int,
                  z_part: dict[Monomial, int], mu_j_pivot: dict[Monomial, int],
                  sigma: Fraction,
                  levels: Sequence[FlagOrdering] | None = None) -> TwistedOrdering:
    """Twisted ordering whose twist row takes value +1/2 on the pivot element
    and -1/2 on pivot * z^-1, given the degree-j data of both.

    Raises DepthCapExceeded when no admissible psi separates z from the
    constraint space.
    """
    constraints = _twist_constraints(rank, cap, d, u0, j)
    mons = monomials(rank, j)
    rows = [tuple(c.get(m, Fraction(0)) for m in mons) for c in constraints]
    rows.append(tuple(Fraction(z_part.get(m, 0)) for m in mons))
    rhs = [Fraction(0)] * len(constraints) + [Fraction(1)]
    solution = exactlin.solve_linear(rows, rhs)
    if solution is None:
        raise DepthCapExceeded(
            "difference word is not separable from the twist constraint space")
    psi = tuple((m, c) for m, c in zip(mons, solution) if c != 0)
    psi_on_pivot = sum((c * mu_j_pivot.get(m, 0) for m, c in psi), Fraction(0))
    alpha = (Fraction(1, 2) - psi_on_pivot) / sigma
    return TwistedOrdering(
        rank=rank, cap=cap, pivot_level=d, pivot_coords=tuple(u0),
        twist_degree=j, psi=psi, alpha=alpha,
        levels=tuple(levels) if levels is not None else identity_levels(rank, cap))


def separate(g: Word, k: Word, cap: int = 5, power_bound: int = 64) -> Ordering:
    """An ordering with g positive and k negative, when one exists.

    Mirrors the constructive route: separate leading coordinates with a
    strict functional when possible; otherwise pass to powers with equal
    leading data and split on the depth where the powers diverge.  Raises
    CommonRoot when g and k are positive powers of one primitive root (no
    left ordering separates them) and DepthCapExceeded when the divergence
    is not visible within the cap or needs an unsupported twist shape.
    """
    from .autact import primitive_root
    if g.is_identity() or k.is_identity():
        raise EmptyWord("separation needs nonempty words")
    if g.rank != k.rank:
        raise DimensionMismatch("words live in different free groups")
    rank = g.rank
    root_g = primitive_root(g)
    root_k = primitive_root(k)
    if root_g.root == root_k.root:
        m = root_g.exponent * root_k.exponent // gcd(root_g.exponent, root_k.exponent)
        raise CommonRoot(
            f"both words are positive powers of {root_g.root}",
            root=root_g.root,
            powers=(m // root_g.exponent, m // root_k.exponent))
    dg = lcs_depth(g, cap)
    dk = lcs_depth(k, cap)
    if dg is None or dk is None:
        raise DepthCapExceeded(f"word deeper than class cap {cap}")
    ug = coords_at_level(g, dg)
    uk = coords_at_level(k, dk)
    levels = list(identity_levels(rank, cap))
    if dg != dk:
        levels[dg - 1] = _flag_from_first_row(vector(ug), len(ug))
        levels[dk - 1] = _flag_from_first_row(vector(tuple(-x for x in uk)), len(uk))
        ordering: Ordering = StandardOrdering(rank, cap, tuple(levels))
    else:
        ratio = _positive_ratio(ug, uk)
        if ratio is None:
            f = strict_separator([ug], [uk])
            levels[dg - 1] = _flag_from_first_row(f, len(ug))
            ordering = StandardOrdering(rank, cap, tuple(levels))
        else:
            a, b = ratio.numerator, ratio.denominator
            if max(a, b) > power_bound:
                raise DepthCapExceeded(
                    f"power matching needs exponents beyond {power_bound}")
            big_g = g ** a
            big_k = k ** b
            w = big_g * big_k.inverse()
            assert not w.is_identity()
            j = lcs_depth(w, cap)
            if j is None:
                raise DepthCapExceeded(
                    f"difference of matched powers is deeper than cap {cap}")
            u0 = exactlin.scale_to_integers(vector(ug))
            series_g = magnus(big_g, cap)
            scale = next(Fraction(c, u) for c, u in zip(coords_at_level(big_g, dg), u0) if u)
            ordering = build_twisted(
                rank, cap, dg, u0, j,
                z_part=magnus(w, cap).graded_part(j),
                mu_j_pivot=series_g.graded_part(j),
                sigma=scale)
    assert ordering.sign(g) == 1 and ordering.sign(k) == -1
    return ordering
