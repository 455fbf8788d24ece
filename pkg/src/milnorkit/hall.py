"""Basic commutators and the collection process in free nilpotent groups.

Commutators follow the package convention ``[a, b] = a b a^-1 b^-1``.  With
that convention the natural collection direction is to the right:
``c d = [c, d] d c``, i.e. conjugating ``d`` on the left by ``c`` produces
``[c, d] d``.  Accordingly

* a basic commutator of weight >= 2 is ``[b, a]`` with ``b < a`` and, when
  ``a = [a1, a2]``, also ``a1 <= b`` (the mirror image of the classical Hall
  condition);
* basis entries are ordered by weight, generators in index order, and
  within a weight by the indices of ``(b, a)``;
* the normal form of ``g`` in ``F/F_{n+1}`` is ``c_N^e_N ... c_2^e_2 c_1^e_1``
  with the highest entries on the left.

Collection moves the least uncollected basis letter to the right end of the
word.  Every commutator the process introduces is again basic, so the
rewriting never leaves the basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .config import check_degree
from .words import FreeWord, commutator, reduce

__all__ = [
    "HallEntry",
    "HallBasis",
    "NilpotentCoordinates",
    "hall_basis",
    "collect",
    "in_lcs",
    "witt_number",
]

Letter = tuple  # (basis index, sign)


@dataclass(frozen=True)
class HallEntry:
    weight: int
    left: int | None = None
    right: int | None = None
    generator: int | None = None  # 1-based generator for weight-1 entries


def witt_number(m: int, k: int) -> int:
    """Number of basic commutators of weight k on m generators."""
    from sympy import divisors, mobius

    return sum(int(mobius(d)) * m ** (k // d) for d in divisors(k)) // k


@dataclass(eq=False)
class HallBasis:
    rank: int
    nclass: int
    entries: tuple[HallEntry, ...]
    _pairs: dict = field(default_factory=dict, repr=False)
    _conj_cache: dict = field(default_factory=dict, repr=False)
    _words: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.entries)

    def weight(self, i: int) -> int:
        return self.entries[i].weight

    def pair_index(self, b: int, a: int) -> int | None:
        """Index of ``[b, a]``, or None when its weight exceeds the class."""
        if self.entries[b].weight + self.entries[a].weight > self.nclass:
            return None
        try:
            return self._pairs[(b, a)]
        except KeyError:
            raise AssertionError(f"[{b},{a}] is not a basic commutator") from None

    def name(self, i: int) -> str:
        e = self.entries[i]
        if e.generator is not None:
            return f"x{e.generator}"
        return f"[{self.name(e.left)},{self.name(e.right)}]"

    def word(self, i: int) -> FreeWord:
        w = self._words.get(i)
        if w is None:
            e = self.entries[i]
            if e.generator is not None:
                w = FreeWord((e.generator,), self.rank)
            else:
                w = commutator(self.word(e.left), self.word(e.right))
            self._words[i] = w
        return w

    def dump(self) -> str:
        return "\n".join(f"w={e.weight} {self.name(i)}" for i, e in enumerate(self.entries))

    def indices_of_weight(self, k: int) -> list[int]:
        return [i for i, e in enumerate(self.entries) if e.weight == k]

    # conjugation rules ---------------------------------------------------

    def left_conjugate_letter(self, c: int, eps: int, d: int, sign: int) -> list[Letter]:
        if sign == 1:
            return self.left_conjugate(c, eps, d)
        key = (c, eps, -1 - d)
        cached = self._conj_cache.get(key)
        if cached is None:
            cached = _inverse_letters(self.left_conjugate(c, eps, d))
            self._conj_cache[key] = cached
        return cached

    def left_conjugate(self, c: int, eps: int, d: int) -> list[Letter]:
        """Letters of ``c^eps d c^-eps`` for basis entries ``c < d``."""
        key = (c, eps, d)
        cached = self._conj_cache.get(key)
        if cached is not None:
            return cached
        b = self.pair_index(c, d)
        if b is None:
            out = [(d, 1)]
        elif eps == 1:
            # c d c^-1 = [c, d] d
            out = [(b, 1), (d, 1)]
        else:
            # c^-1 d c = (c^-1 [c,d] c)^-1 d
            out = _inverse_letters(self.left_conjugate(c, -1, b)) + [(d, 1)]
        self._conj_cache[key] = out
        return out


def _inverse_letters(letters: Sequence[Letter]) -> list[Letter]:
    return [(i, -s) for i, s in reversed(letters)]


def hall_basis(m: int, n: int) -> HallBasis:
    if m < 1:
        raise ValueError("rank must be positive")
    if n < 1:
        raise ValueError("class must be at least 1")
    check_degree(n, "class")
    entries: list[HallEntry] = [HallEntry(1, generator=g) for g in range(1, m + 1)]
    pairs: dict = {}
    for k in range(2, n + 1):
        new = []
        for b, eb in enumerate(entries):
            for a, ea in enumerate(entries):
                if eb.weight + ea.weight != k or not b < a:
                    continue
                if ea.left is not None and ea.left > b:
                    continue
                new.append((b, a))
        for b, a in new:
            pairs[(b, a)] = len(entries)
            entries.append(HallEntry(k, left=b, right=a))
    return HallBasis(m, n, tuple(entries), _pairs=pairs)


@dataclass(frozen=True)
class NilpotentCoordinates:
    """Exponents of the normal form ``c_N^e_N ... c_1^e_1`` in ``F/F_{n+1}``."""

    basis: HallBasis = field(compare=False, repr=False)
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.basis):
            raise ValueError("exponent vector length must equal the basis size")

    def __getitem__(self, i):
        return self.exponents[i]

    def letters(self) -> list[Letter]:
        out = []
        for i in range(len(self.exponents) - 1, -1, -1):
            e = self.exponents[i]
            out.extend([(i, 1 if e > 0 else -1)] * abs(e))
        return out

    def __mul__(self, other: "NilpotentCoordinates") -> "NilpotentCoordinates":
        if other.basis is not self.basis:
            raise ValueError("coordinates refer to different bases")
        # re-collect from generators: basis letters alone may pair into non-basic commutators
        w = self.to_word() * other.to_word()
        return collect(w, self.basis.nclass, self.basis)

    def to_word(self) -> FreeWord:
        b = self.basis
        letters: list[int] = []
        for i, s in self.letters():
            w = b.word(i)
            letters.extend(w.letters if s > 0 else w.inverse().letters)
        return reduce(letters, b.rank)

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def least_weight(self) -> int | None:
        ws = [self.basis.weight(i) for i, e in enumerate(self.exponents) if e]
        return min(ws) if ws else None


def _push(rtail: list, letter: Letter) -> None:
    # rtail holds letters in reverse order; prepend == append here
    if rtail and rtail[-1] == (letter[0], -letter[1]):
        rtail.pop()
    else:
        rtail.append(letter)


def collect_letters(basis: HallBasis, letters: Sequence[Letter]) -> NilpotentCoordinates:
    """Collect into normal form.

    Only words in the generator letters are guaranteed to stay inside the
    basis during collection.
    """
    exps = [0] * len(basis)
    rest = [(i, s) for i, s in letters if basis.weight(i) <= basis.nclass]
    last = -1
    while rest:
        c = min(i for i, _ in rest)
        assert c > last, "collection produced a letter below the collected part"
        rtail: list = []
        e = 0
        for i, s in reversed(rest):
            if i != c:
                _push(rtail, (i, s))
                continue
            e += s
            # c^s * tail = (c^s tail c^-s) * c^s
            conjugated: list = []
            for d, t in reversed(rtail):
                conjugated.extend(basis.left_conjugate_letter(c, s, d, t))
            rtail = []
            for letter in reversed(conjugated):
                _push(rtail, letter)
        exps[c] = e
        rest = rtail[::-1]
        last = c
    return NilpotentCoordinates(basis, tuple(exps))


def collect(w: FreeWord, n: int, basis: HallBasis | None = None) -> NilpotentCoordinates:
    """Normal form of ``w`` in ``F/F_{n+1}`` w.r.t. ``hall_basis(rank, n)``."""
    check_degree(n, "class")
    if basis is None:
        basis = hall_basis(w.rank, n)
    elif basis.nclass != n or basis.rank < w.rank:
        raise ValueError("basis does not match the requested rank/class")
    return collect_letters(basis, [(abs(a) - 1, 1 if a > 0 else -1) for a in w.letters])


def in_lcs(w: FreeWord, k: int, basis: HallBasis | None = None) -> bool:
    """True iff ``w`` lies in the k-th lower central subgroup ``F_k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    check_degree(k, "class")
    if k == 1:
        return True
    coords = collect(w, k, basis)
    lw = coords.least_weight()
    return lw is None or lw >= k
