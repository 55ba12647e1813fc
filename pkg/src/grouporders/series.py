"""Integer power series in noncommuting variables, truncated by total degree.

A word maps into the units of this ring by sending the i-th generator to
``1 + X_i`` (and its inverse to the truncated geometric series).  The image
of a word w is written mu(w) here; its lowest nonzero homogeneous part above
degree 0 locates w in the lower central series, which for free groups
coincides with its torsion-adjusted variant because every quotient of
consecutive terms is free abelian.

Monomials are tuples of generator indices; the empty tuple is the constant
term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import EmptyWord
from .words import Word

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class TruncatedSeries:
    rank: int
    cap: int
    coeffs: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {m: c for m, c in self.coeffs.items() if c != 0 and len(m) <= self.cap}
        object.__setattr__(self, "coeffs", cleaned)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruncatedSeries)
                and self.rank == other.rank
                and self.cap == other.cap
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.rank, self.cap, frozenset(self.coeffs.items())))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        assert self.rank == other.rank and self.cap == other.cap
        out: dict[Monomial, int] = {}
        for m1, c1 in self.coeffs.items():
            room = self.cap - len(m1)
            for m2, c2 in other.coeffs.items():
                if len(m2) > room:
                    continue
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return TruncatedSeries(self.rank, self.cap, out)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        assert self.rank == other.rank and self.cap == other.cap
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return TruncatedSeries(self.rank, self.cap, out)

    def is_one(self) -> bool:
        return self.coeffs == {(): 1}

    def graded_part(self, degree: int) -> dict[Monomial, int]:
        return {m: c for m, c in self.coeffs.items() if len(m) == degree}

    def min_degree(self) -> int | None:
        """Lowest degree >= 1 carrying a nonzero coefficient, else None."""
        degrees = [len(m) for m in self.coeffs if m]
        return min(degrees) if degrees else None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        def key(m):
            return (len(m), m)
        parts = []
        for m in sorted(self.coeffs, key=key):
            c = self.coeffs[m]
            name = "1" if not m else " ".join(f"X{i}" for i in m)
            if c == 1 and m:
                parts.append(f"+ {name}")
            elif c == -1 and m:
                parts.append(f"- {name}")
            elif c >= 0:
                parts.append(f"+ {c} {name}".rstrip() if m else f"+ {c}")
            else:
                parts.append(f"- {-c} {name}".rstrip() if m else f"- {-c}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text


def one(rank: int, cap: int) -> TruncatedSeries:
    return TruncatedSeries(rank, cap, {(): 1})


def _mul_generator(series_coeffs: dict[Monomial, int], index: int, sign: int,
                   cap: int) -> dict[Monomial, int]:
    """Multiply on the right by (1 + X)^sign, truncated."""
    out: dict[Monomial, int] = {}
    for m, c in series_coeffs.items():
        out[m] = out.get(m, 0) + c
        if sign > 0:
            m2 = m + (index,)
            if len(m2) <= cap:
                out[m2] = out.get(m2, 0) + c
        else:
            coeff = c
            m2 = m
            for _ in range(cap - len(m)):
                m2 = m2 + (index,)
                coeff = -coeff
                out[m2] = out.get(m2, 0) + coeff
    return {m: c for m, c in out.items() if c != 0}


def magnus(w: Word, cap: int) -> TruncatedSeries:
    """Multiplicative embedding of a word, truncated above total degree cap."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    coeffs: dict[Monomial, int] = {(): 1}
    for letter in w.letters:
        coeffs = _mul_generator(coeffs, abs(letter), 1 if letter > 0 else -1, cap)
    return TruncatedSeries(w.rank, cap, coeffs)


def lcs_depth(w: Word, cap: int) -> int | None:
    """Smallest i with a degree-i term in mu(w) - 1; None when deeper than cap.

    Every nonempty reduced word has finite depth once the cap is large
    enough (residual nilpotence of free groups), so None always means "not
    visible at this cap", never "trivial".
    """
    if w.is_identity():
        raise EmptyWord("depth is undefined for the identity")
    return magnus(w, cap).min_degree()
