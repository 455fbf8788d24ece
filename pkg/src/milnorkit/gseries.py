"""Lower central series of the kernel of a map from a free group onto a finite group.

The finite group ``G`` is given by the right-regular permutation images of
the free generators: ``images[i][h]`` is the element ``h * g_i``.  The kernel
``Gamma`` has index ``|G|`` and is free; Reidemeister-Schreier gives a basis
and a rewriting procedure, after which membership in ``Gamma_n`` (the n-th
lower central subgroup of ``Gamma``) is a Magnus computation in the free
group on that basis.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .config import MAX_GROUP_ORDER, check_degree
from .errors import NotInKernel, NotSurjective, ParseError
from .magnus import lcs_degree
from .words import FreeWord, reduce

__all__ = [
    "FiniteQuotientMap",
    "SchreierData",
    "schreier_basis",
    "rewrite_in_subgroup",
    "expand_from_subgroup",
    "gamma_n_member",
    "cyclic_quotient",
]


def _inverse_perm(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


@dataclass(frozen=True)
class FiniteQuotientMap:
    rank: int
    order: int
    images: tuple[tuple[int, ...], ...]
    identity: int = 0

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if len(self.images) != self.rank:
            raise ValueError(f"expected {self.rank} generator images, got {len(self.images)}")
        if not 1 <= self.order <= MAX_GROUP_ORDER:
            raise ValueError(f"group order must lie in 1..{MAX_GROUP_ORDER}, got {self.order}")
        if not 0 <= self.identity < self.order:
            raise ValueError("identity index out of range")
        for k, p in enumerate(self.images):
            if sorted(p) != list(range(self.order)):
                raise ValueError(f"image of x{k + 1} is not a permutation of 0..{self.order - 1}")

    @property
    def inverse_images(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_inverse_perm(p) for p in self.images)

    def act(self, h: int, letter: int) -> int:
        i = abs(letter) - 1
        if letter > 0:
            return self.images[i][h]
        return self.inverse_images[i][h]

    def image(self, w: FreeWord) -> int:
        """Index of the image of ``w`` in ``G``."""
        if w.rank > self.rank:
            raise ValueError("word rank exceeds the map's rank")
        inv = self.inverse_images
        h = self.identity
        for a in w.letters:
            h = self.images[a - 1][h] if a > 0 else inv[-a - 1][h]
        return h

    def to_dict(self) -> dict:
        out = {"order": self.order, "images": [list(p) for p in self.images]}
        if self.identity:
            out["identity"] = self.identity
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> "FiniteQuotientMap":
        try:
            order = data["order"]
            images = tuple(tuple(int(x) for x in p) for p in data["images"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad quotient map: {exc}") from None
        return cls(len(images), order, images, data.get("identity", 0))

    @classmethod
    def from_json(cls, text: str) -> "FiniteQuotientMap":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc}") from None
        return cls.from_dict(data)


def cyclic_quotient(rank: int, order: int, exponents: Sequence[int]) -> FiniteQuotientMap:
    """``x_i -> t^exponents[i]`` onto the cyclic group of the given order."""
    images = tuple(tuple((h + e) % order for h in range(order)) for e in exponents)
    return FiniteQuotientMap(rank, order, images)


@dataclass(frozen=True)
class SchreierData:
    quotient: FiniteQuotientMap
    transversal: tuple[FreeWord, ...]  # indexed by group element
    basis: tuple[FreeWord, ...]
    # table[h][i] = 1-based basis letter for (h, x_{i+1}), or 0 when trivial
    table: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def schreier_basis(q: FiniteQuotientMap) -> SchreierData:
    m, N = q.rank, q.order
    inv = q.inverse_images
    reps: dict[int, tuple[int, ...]] = {q.identity: ()}
    queue = deque([q.identity])
    alphabet = [s * (i + 1) for i in range(m) for s in (1, -1)]
    while queue:
        h = queue.popleft()
        for a in alphabet:
            g = q.images[a - 1][h] if a > 0 else inv[-a - 1][h]
            if g not in reps:
                reps[g] = reps[h] + (a,)
                queue.append(g)
    if len(reps) != N:
        missing = min(set(range(N)) - set(reps))
        raise NotSurjective(f"element {missing} is not reached by the generators")

    transversal = tuple(FreeWord(reps[h], m) for h in range(N))
    order = sorted(range(N), key=lambda h: (len(reps[h]), _shortlex_key(reps[h])))
    basis: list[FreeWord] = []
    table = [[0] * m for _ in range(N)]
    for h in order:
        for i in range(m):
            g = q.images[i][h]
            w = reduce(reps[h] + (i + 1,) + tuple(-a for a in reversed(reps[g])), m)
            if w.letters:
                basis.append(w)
                table[h][i] = len(basis)
    data = SchreierData(q, transversal, tuple(basis), tuple(tuple(r) for r in table))
    _check_regular(data)
    return data


def _shortlex_key(letters):
    # alphabet order x1, x1^-1, x2, x2^-1, ...
    return tuple(2 * (abs(a) - 1) + (a < 0) for a in letters)


def _check_regular(s: SchreierData) -> None:
    # the kernel is the point stabiliser only for a regular action
    q = s.quotient
    for w in s.basis:
        for h in range(q.order):
            g = h
            for a in w.letters:
                g = q.act(g, a)
            if g != h:
                raise ValueError("generator images do not form a regular representation")


def rewrite_in_subgroup(s: SchreierData, w: FreeWord) -> FreeWord:
    """Express a kernel element as a word in the Schreier basis."""
    q = s.quotient
    if w.rank > q.rank:
        raise ValueError("word rank exceeds the map's rank")
    h = q.identity
    out: list[int] = []
    for a in w.letters:
        i = abs(a) - 1
        if a > 0:
            b = s.table[h][i]
            if b:
                out.append(b)
            h = q.images[i][h]
        else:
            h = q.act(h, a)
            b = s.table[h][i]
            if b:
                out.append(-b)
    if h != q.identity:
        raise NotInKernel(f"word maps to element {h}, not the identity", image=h)
    return reduce(out, max(s.rank, 1))


def expand_from_subgroup(s: SchreierData, u: FreeWord) -> FreeWord:
    """Substitute basis words back in; inverse of :func:`rewrite_in_subgroup` up to free reduction."""
    letters: list[int] = []
    for b in u.letters:
        w = s.basis[abs(b) - 1]
        letters.extend(w.letters if b > 0 else w.inverse().letters)
    return reduce(letters, s.quotient.rank)


def gamma_n_member(s: SchreierData, w: FreeWord, n: int) -> bool:
    """True iff ``w`` lies in the n-th lower central subgroup of the kernel."""
    if n < 1:
        raise ValueError("n must be at least 1")
    check_degree(n)
    u = rewrite_in_subgroup(s, w)
    if n == 1 or not u.letters:
        return True
    return lcs_degree(u, n) >= n
