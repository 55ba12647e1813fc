"""Freely reduced words and endomorphisms of finitely generated free groups.

Letters are nonzero integers: ``+i`` is the i-th generator, ``-i`` its
inverse (indices run 1..rank).  Words always stay freely reduced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError, RankMismatch


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    rank: int
    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        if any(x == 0 or abs(x) > self.rank for x in letters):
            raise ParseError(f"letters must lie in 1..{self.rank} up to sign")
        if _reduce(letters) != letters:
            raise ParseError("words must be freely reduced; use word() to build")
        object.__setattr__(self, "letters", letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.rank != other.rank:
            raise RankMismatch("cannot multiply words of different ranks")
        return Word(self.rank, _reduce(self.letters + other.letters))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        result = identity_word(self.rank)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> "Word":
        return Word(self.rank, tuple(-x for x in reversed(self.letters)))

    def conjugate_by(self, c: "Word") -> "Word":
        return c * self * c.inverse()

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def cyclic_reduce(self) -> tuple["Word", "Word"]:
        """(core, conjugator) with self == conjugator * core * conjugator^-1."""
        letters = list(self.letters)
        prefix: list[int] = []
        while len(letters) >= 2 and letters[0] == -letters[-1]:
            prefix.append(letters[0])
            letters = letters[1:-1]
        return Word(self.rank, tuple(letters)), Word(self.rank, _reduce(prefix))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        i = 0
        while i < len(self.letters):
            letter = self.letters[i]
            j = i
            while j < len(self.letters) and self.letters[j] == letter:
                j += 1
            exp = (j - i) * (1 if letter > 0 else -1)
            parts.append(f"x{abs(letter)}" + (f"^{exp}" if exp != 1 else ""))
            i = j
        return " ".join(parts)


def identity_word(rank: int) -> Word:
    return Word(rank, ())


def word(rank: int, letters: Iterable[int]) -> Word:
    return Word(rank, _reduce(letters))


def generator(rank: int, index: int, power: int = 1) -> Word:
    if not 1 <= index <= rank:
        raise ParseError(f"generator index {index} outside 1..{rank}")
    sign = 1 if power >= 0 else -1
    return Word(rank, (sign * index,) * abs(power))


def commutator(u: Word, v: Word) -> Word:
    return u * v * u.inverse() * v.inverse()


_TOKEN = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str, rank: int | None = None) -> Word:
    """Parse whitespace-separated tokens like ``x1 x2^-1 x1^3``.

    With ``rank=None`` the rank is the largest generator index seen (at
    least 1).
    """
    tokens = text.split()
    letters: list[int] = []
    max_index = 1
    for token in tokens:
        if token == "1":
            continue
        m = _TOKEN.match(token)
        if not m:
            raise ParseError(f"bad word token {token!r}")
        index = int(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        if index < 1:
            raise ParseError(f"bad generator index in {token!r}")
        max_index = max(max_index, index)
        letters.extend([index if power > 0 else -index] * abs(power))
    if rank is None:
        rank = max_index
    return word(rank, letters)


@dataclass(frozen=True)
class Endomorphism:
    """Map of a free group given by the images of its generators."""

    rank: int
    images: tuple[Word, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if len(images) != self.rank:
            raise RankMismatch(f"expected {self.rank} generator images")
        if any(w.rank != self.rank for w in images):
            raise RankMismatch("image words must live in the same free group")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, rank: int) -> "Endomorphism":
        return cls(rank, tuple(generator(rank, i) for i in range(1, rank + 1)))

    def is_identity(self) -> bool:
        return self == Endomorphism.identity(self.rank)

    def apply(self, w: Word) -> Word:
        if w.rank != self.rank:
            raise RankMismatch("word rank does not match endomorphism rank")
        letters: list[int] = []
        for letter in w.letters:
            image = self.images[abs(letter) - 1]
            if letter > 0:
                letters.extend(image.letters)
            else:
                letters.extend(image.inverse().letters)
        return word(self.rank, letters)

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """self after other: compose(f, g).apply(w) == f.apply(g.apply(w))."""
        if self.rank != other.rank:
            raise RankMismatch("cannot compose maps of different ranks")
        return Endomorphism(self.rank, tuple(self.apply(w) for w in other.images))

    def __str__(self) -> str:
        return " ; ".join(f"x{i + 1} -> {img}" for i, img in enumerate(self.images))


def parse_endomorphism(text: str, rank: int | None = None) -> Endomorphism:
    """Parse clauses like ``x1 -> x1 x2 ; x2 -> x2``.

    Unlisted generators are fixed; the rank defaults to the largest index
    mentioned anywhere.
    """
    clauses = [c.strip() for c in text.split(";") if c.strip()]
    if not clauses:
        raise ParseError("empty endomorphism")
    mapping: dict[int, str] = {}
    max_index = 1
    for clause in clauses:
        if "->" not in clause:
            raise ParseError(f"clause {clause!r} lacks '->'")
        lhs, rhs = clause.split("->", 1)
        m = _TOKEN.match(lhs.strip())
        if not m or m.group(2) is not None:
            raise ParseError(f"left side of {clause!r} must be a bare generator")
        index = int(m.group(1))
        if index in mapping:
            raise ParseError(f"generator x{index} mapped twice")
        mapping[index] = rhs.strip()
        max_index = max(max_index, index)
        for token in rhs.split():
            tm = _TOKEN.match(token)
            if tm:
                max_index = max(max_index, int(tm.group(1)))
    if rank is None:
        rank = max_index
    images = []
    for i in range(1, rank + 1):
        if i in mapping:
            images.append(parse_word(mapping[i], rank))
        else:
            images.append(generator(rank, i))
    return Endomorphism(rank, tuple(images))


@dataclass(frozen=True)
class Automorphism:
    """Endomorphism bundled with a verified two-sided inverse."""

    forward: Endomorphism
    inverse: Endomorphism

    def __post_init__(self):
        rank = self.forward.rank
        ident = Endomorphism.identity(rank)
        if self.forward.compose(self.inverse) != ident or \
                self.inverse.compose(self.forward) != ident:
            raise RankMismatch("maps are not mutually inverse")

    @property
    def rank(self) -> int:
        return self.forward.rank

    def apply(self, w: Word) -> Word:
        return self.forward.apply(w)

    def compose(self, other: "Automorphism") -> "Automorphism":
        return Automorphism(self.forward.compose(other.forward),
                            other.inverse.compose(self.inverse))

    def is_identity(self) -> bool:
        return self.forward.is_identity()


def inner_automorphism(c: Word) -> Automorphism:
    rank = c.rank
    fwd = Endomorphism(rank, tuple(generator(rank, i).conjugate_by(c)
                                   for i in range(1, rank + 1)))
    cinv = c.inverse()
    inv = Endomorphism(rank, tuple(generator(rank, i).conjugate_by(cinv)
                                   for i in range(1, rank + 1)))
    return Automorphism(fwd, inv)


def ball_words(rank: int, radius: int) -> Iterator[Word]:
    """Nonempty reduced words of length <= radius, in length-lex order.

    The letter order is x1 < x1^-1 < x2 < x2^-1 < ...
    """
    alphabet = []
    for i in range(1, rank + 1):
        alphabet.extend([i, -i])
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(radius):
        next_frontier = []
        for prefix in frontier:
            for letter in alphabet:
                if prefix and prefix[-1] == -letter:
                    continue
                extended = prefix + (letter,)
                next_frontier.append(extended)
                yield Word(rank, extended)
        frontier = next_frontier
