"""Freely reduced words in a free group of finite rank.

Letters are signed integers: ``i`` stands for ``x_i`` and ``-i`` for its
inverse, with generators numbered ``1..rank``.  The commutator convention
used everywhere in the package is ``[a, b] = a b a^-1 b^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError

__all__ = ["FreeWord", "reduce", "commutator", "parse_word"]


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        for a in self.letters:
            if a == 0 or abs(a) > self.rank:
                raise IndexError(f"generator {a} out of range for rank {self.rank}")
        if _free_reduce(self.letters) != self.letters:
            raise ValueError("FreeWord letters must be freely reduced; use reduce()")

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls((), rank)

    @classmethod
    def generator(cls, i: int, rank: int, sign: int = 1) -> "FreeWord":
        return cls((sign * i,), rank)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        _check_rank(self, other)
        return reduce(self.letters + other.letters, self.rank)

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        return reduce(base.letters * abs(k), self.rank)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple(-a for a in reversed(self.letters)), self.rank)

    def is_identity(self) -> bool:
        return not self.letters

    def pairs(self) -> list[tuple[int, int]]:
        """Letters as ``(generator index, exponent sign)`` pairs."""
        return [(abs(a), 1 if a > 0 else -1) for a in self.letters]

    def exponent_sums(self) -> list[int]:
        sums = [0] * self.rank
        for a in self.letters:
            sums[abs(a) - 1] += 1 if a > 0 else -1
        return sums

    def with_rank(self, rank: int) -> "FreeWord":
        return FreeWord(self.letters, rank)

    def to_text(self, symbol: str = "x") -> str:
        return " ".join(f"{symbol}{abs(a)}" + ("" if a > 0 else "^-1") for a in self.letters)

    def __str__(self):
        return self.to_text() or "1"


def _check_rank(a: FreeWord, b: FreeWord) -> None:
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")


def reduce(letters: Iterable[int] | Iterable[tuple[int, int]], rank: int) -> FreeWord:
    """Freely reduce a letter sequence.

    Accepts signed integers or ``(generator, sign)`` pairs.

    >>> str(reduce([1, 2, -2, 1], 2))
    'x1 x1'
    """
    flat = []
    for a in letters:
        if isinstance(a, tuple):
            g, s = a
            if s not in (1, -1):
                raise ValueError(f"exponent sign must be +-1, got {s}")
            a = g * s
        if a == 0 or abs(a) > rank:
            raise IndexError(f"generator {a} out of range for rank {rank}")
        flat.append(a)
    return FreeWord(_free_reduce(flat), rank)


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    _check_rank(a, b)
    return reduce(a.letters + b.letters + a.inverse().letters + b.inverse().letters, a.rank)


_TOKEN = re.compile(r"^([A-Za-z]+)(\d+)(\^(-?1))?$")


def parse_word(text: str, rank: int) -> FreeWord:
    """Parse ``"x1 x2^-1 x1"``; ``""`` and ``"1"`` mean the identity."""
    letters = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad word token {tok!r}")
        g = int(m.group(2))
        sign = -1 if m.group(4) == "-1" else 1
        letters.append(sign * g)
    return reduce(letters, rank)

