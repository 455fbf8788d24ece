"""Truncated noncommutative power series and the Magnus embedding.

A :class:`MagnusSeries` is an integer polynomial in noncommuting variables
``X1..Xm`` with every monomial of degree above a fixed bound discarded.
Monomials are tuples of 1-based variable indices; the empty tuple is the
constant term.  The Magnus map sends ``x_i`` to ``1 + X_i``, so a word lies
in the k-th lower central subgroup ``F_k`` exactly when its image has no
nonzero terms in degrees ``1..k-1``.
"""

from __future__ import annotations

import json
from collections import defaultdict
from types import MappingProxyType
from typing import Iterable, Mapping

from .config import AtLeast, check_degree
from .errors import NotAUnit, ParseError
from .words import FreeWord

__all__ = [
    "MagnusSeries",
    "expand",
    "multiply",
    "invert",
    "lcs_degree",
    "monomial_text",
    "parse_monomial",
]

Monomial = tuple


def monomial_text(mono: Monomial) -> str:
    if not mono:
        return "1"
    return ".".join(f"X{i}" for i in mono)


def parse_monomial(text: str) -> Monomial:
    if text == "1":
        return ()
    out = []
    for part in text.split("."):
        if not part.startswith("X") or not part[1:].isdigit():
            raise ParseError(f"bad monomial {text!r}")
        out.append(int(part[1:]))
    return tuple(out)


def _sort_key(mono):
    return (len(mono), mono)


class MagnusSeries:
    """Integer series truncated above ``degree``; zero terms are never stored."""

    __slots__ = ("rank", "degree", "_coeffs", "_by_degree")

    def __init__(self, rank: int, degree: int, coeffs: Mapping[Monomial, int] | None = None):
        if rank < 1:
            raise ValueError("rank must be positive")
        if degree < 0:
            raise ValueError("degree bound must be nonnegative")
        clean = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(mono)
            if len(mono) > degree or c == 0:
                continue
            for i in mono:
                if not 1 <= i <= rank:
                    raise IndexError(f"variable X{i} out of range for rank {rank}")
            clean[mono] = int(c)
        self.rank = rank
        self.degree = degree
        self._coeffs = clean
        self._by_degree = None

    # construction -------------------------------------------------------

    @classmethod
    def constant(cls, rank: int, degree: int, c: int = 1) -> "MagnusSeries":
        return cls(rank, degree, {(): c})

    @classmethod
    def one(cls, rank: int, degree: int) -> "MagnusSeries":
        return cls.constant(rank, degree, 1)

    @classmethod
    def generator_image(cls, i: int, rank: int, degree: int, sign: int = 1) -> "MagnusSeries":
        """Image of ``x_i`` (sign +1) or ``x_i^-1`` (sign -1)."""
        if sign == 1:
            return cls(rank, degree, {(): 1, (i,): 1})
        return cls(rank, degree, {(i,) * k: (-1) ** k for k in range(degree + 1)})

    @classmethod
    def _raw(cls, rank, degree, coeffs):
        s = cls.__new__(cls)
        s.rank = rank
        s.degree = degree
        s._coeffs = coeffs
        s._by_degree = None
        return s

    # mapping-like access ------------------------------------------------

    @property
    def coefficients(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._coeffs)

    def __getitem__(self, mono) -> int:
        return self._coeffs.get(tuple(mono), 0)

    def coefficient(self, mono: Iterable[int]) -> int:
        return self._coeffs.get(tuple(mono), 0)

    def terms(self, degree: int | None = None):
        items = sorted(self._coeffs.items(), key=lambda kv: _sort_key(kv[0]))
        if degree is None:
            return items
        return [(m, c) for m, c in items if len(m) == degree]

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, MagnusSeries):
            return NotImplemented
        return (self.rank, self.degree, self._coeffs) == (other.rank, other.degree, other._coeffs)

    def __hash__(self):
        return hash((self.rank, self.degree, frozenset(self._coeffs.items())))

    @property
    def constant_term(self) -> int:
        return self._coeffs.get((), 0)

    def min_degree(self) -> int | None:
        """Least positive degree carrying a nonzero term, or None."""
        degs = [len(m) for m in self._coeffs if m]
        return min(degs) if degs else None

    def vanishes_below(self, k: int) -> bool:
        """True when every term of degree ``1..k-1`` is zero."""
        return all(len(m) == 0 or len(m) >= k for m in self._coeffs)

    def truncate(self, degree: int) -> "MagnusSeries":
        if degree > self.degree:
            raise ValueError("cannot raise the degree bound by truncation")
        return MagnusSeries._raw(
            self.rank, degree, {m: c for m, c in self._coeffs.items() if len(m) <= degree}
        )

    def _buckets(self):
        if self._by_degree is None:
            buckets = [[] for _ in range(self.degree + 1)]
            for m, c in self._coeffs.items():
                buckets[len(m)].append((m, c))
            self._by_degree = buckets
        return self._by_degree

    # arithmetic ---------------------------------------------------------

    def __add__(self, other: "MagnusSeries") -> "MagnusSeries":
        _check_shape(self, other)
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MagnusSeries._raw(self.rank, self.degree, out)

    def __neg__(self):
        return MagnusSeries._raw(self.rank, self.degree, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MagnusSeries._raw(self.rank, self.degree, {})
            return MagnusSeries._raw(
                self.rank, self.degree, {m: c * other for m, c in self._coeffs.items()}
            )
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def times_letter(self, letter: int) -> "MagnusSeries":
        """Right-multiply by the image of ``x_i`` (letter ``i``) or ``x_i^-1`` (``-i``)."""
        i = abs(letter)
        n = self.degree
        out = defaultdict(int, self._coeffs)
        if letter > 0:
            for m, c in self._coeffs.items():
                if len(m) < n:
                    out[m + (i,)] += c
        else:
            for m, c in self._coeffs.items():
                tail = m
                sign = -1
                for _ in range(n - len(m)):
                    tail = tail + (i,)
                    out[tail] += sign * c
                    sign = -sign
        return MagnusSeries._raw(self.rank, n, {m: c for m, c in out.items() if c})

    def shift_left(self, i: int) -> "MagnusSeries":
        """``X_i * self``, truncated."""
        return MagnusSeries._raw(
            self.rank,
            self.degree,
            {(i,) + m: c for m, c in self._coeffs.items() if len(m) < self.degree},
        )

    def shift_right(self, i: int) -> "MagnusSeries":
        """``self * X_i``, truncated."""
        return MagnusSeries._raw(
            self.rank,
            self.degree,
            {m + (i,): c for m, c in self._coeffs.items() if len(m) < self.degree},
        )

    # text / json ----------------------------------------------------------

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for m, c in self.terms():
            body = monomial_text(m)
            if m:
                coef = "" if abs(c) == 1 else f"{abs(c)}*"
                term = coef + body.replace(".", "")
            else:
                term = str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"MagnusSeries(rank={self.rank}, degree={self.degree}, {self})"

    def to_dict(self) -> dict:
        return {monomial_text(m): c for m, c in self.terms()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping[str, int], rank: int, degree: int) -> "MagnusSeries":
        return cls(rank, degree, {parse_monomial(k): v for k, v in data.items()})


def _check_shape(a: MagnusSeries, b: MagnusSeries) -> None:
    if a.rank != b.rank or a.degree != b.degree:
        raise ValueError(
            f"shape mismatch: (rank {a.rank}, degree {a.degree}) vs (rank {b.rank}, degree {b.degree})"
        )


def multiply(a: MagnusSeries, b: MagnusSeries) -> MagnusSeries:
    """Noncommutative product, dropping everything above the degree bound."""
    _check_shape(a, b)
    n = a.degree
    buckets = b._buckets()
    out: dict = defaultdict(int)
    for ma, x in a._coeffs.items():
        room = n - len(ma)
        for d in range(room + 1):
            for mb, y in buckets[d]:
                out[ma + mb] += x * y
    return MagnusSeries._raw(a.rank, n, {m: c for m, c in out.items() if c})


def invert(a: MagnusSeries) -> MagnusSeries:
    c0 = a.constant_term
    if c0 not in (1, -1):
        raise NotAUnit(f"constant term {c0} is not a unit")
    # a = c0 * (1 + r) with r of positive degree; 1/(1+r) = sum (-r)^k
    r = a * c0 - MagnusSeries.one(a.rank, a.degree)
    one = MagnusSeries.one(a.rank, a.degree)
    inv = one
    for _ in range(a.degree):
        inv = one - multiply(r, inv)
    return inv * c0


def expand(w: FreeWord, n: int, rank: int | None = None) -> MagnusSeries:
    """Magnus image of ``w`` truncated at degree ``n``."""
    if n < 1:
        raise ValueError("degree bound must be at least 1")
    check_degree(n)
    rank = w.rank if rank is None else rank
    if rank < w.rank:
        raise ValueError("rank smaller than the word's rank")
    s = MagnusSeries.one(rank, n)
    for a in w.letters:
        s = s.times_letter(a)
    return s


def lcs_degree(w: FreeWord, cap: int) -> int | AtLeast:
    """Largest k with ``w`` in ``F_k``, or ``AtLeast(cap)`` once that reaches the cap."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    check_degree(cap)
    k = expand(w, cap).min_degree()
    if k is None or k >= cap:
        return AtLeast(cap)
    return k
