"""Milnor's longitude reduction and the table of mu, Delta and mu-bar.

Every arc generator is conjugate to its component's meridian, ``g_a = P_a^-1
m P_a``, where ``P_a`` is a word in other arc generators.  Replacing each arc
by its meridian and then repeatedly re-evaluating the conjugators with the
previous approximation converges, one degree per round, to the image of
every arc in the free group on the meridians (modulo the lower central
series).  We carry truncated Magnus series instead of words, so each round
costs a bounded number of series products.

``mu(I)`` for ``I = (i1, ..., ik)`` is the coefficient of ``X_i1 ... X_i(k-1)``
in the reduced longitude of component ``ik``.  ``Delta(I)`` is the gcd of the
``mu(J)`` for ``J`` a cyclic permutation of a proper subsequence of ``I``,
and ``mu_bar(I)`` is ``mu(I)`` reduced into ``[0, Delta(I))`` (or left alone
when ``Delta(I) = 0``).  Multi-indices are 1-based.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .config import check_degree
from .diagram import LinkDiagram
from .errors import LengthOverflow, NonConvergence
from .magnus import MagnusSeries, multiply
from .wirtinger import GroupPresentation, presentation

__all__ = [
    "ReducedLongitudes",
    "MilnorEntry",
    "MilnorTable",
    "reduce_longitudes",
    "mu",
    "delta",
    "mu_bar",
    "table",
    "index_key",
    "parse_index_key",
]

MultiIndex = tuple


@dataclass(frozen=True)
class ReducedLongitudes:
    n: int
    series: tuple[MagnusSeries, ...]
    stages: int = 0

    @property
    def component_count(self) -> int:
        return len(self.series)

    def vanish_below(self, k: int) -> bool:
        return all(s.vanishes_below(k) for s in self.series)


def reduce_longitudes(p: GroupPresentation, n: int) -> ReducedLongitudes:
    """Longitude series exact in every degree below ``n``."""
    if n < 2:
        raise ValueError("length bound must be at least 2")
    check_degree(n)
    m = p.component_count
    deg = n - 1
    one = MagnusSeries.one(m, deg)
    mer = [MagnusSeries.generator_image(i + 1, m, deg) for i in range(m)]
    mer_inv = [MagnusSeries.generator_image(i + 1, m, deg, -1) for i in range(m)]

    # only arcs that pass over something ever enter a conjugator
    used = sorted({abs(x) - 1 for row in p.passages for x in row if x})
    S = {a: mer[p.component_of[a]] for a in used}
    S_inv = {a: mer_inv[p.component_of[a]] for a in used}

    def factor(letter):
        a = abs(letter) - 1
        return S[a] if letter > 0 else S_inv[a]

    def inverse_factor(letter):
        a = abs(letter) - 1
        return S_inv[a] if letter > 0 else S[a]

    max_rounds = n
    for rounds in range(1, max_rounds + 1):
        new_S, new_S_inv = {}, {}
        for i, comp in enumerate(p.components):
            pi, pi_inv = one, one
            for k, a in enumerate(comp):
                # arc comp[k] follows passages[i][k-1]
                if k:
                    x = p.passages[i][k - 1]
                    if x:
                        pi = multiply(pi, factor(x))
                        pi_inv = multiply(inverse_factor(x), pi_inv)
                if a in S:
                    if pi is one:
                        new_S[a], new_S_inv[a] = mer[i], mer_inv[i]
                    else:
                        new_S[a] = one + multiply(pi_inv, pi.shift_left(i + 1))
                        new_S_inv[a] = multiply(pi_inv, multiply(mer_inv[i], pi))
        stable = new_S == S
        S, S_inv = new_S, new_S_inv
        if stable:
            break
    else:
        raise NonConvergence(f"longitude reduction did not stabilise after {max_rounds} rounds")

    longs = []
    for i in range(m):
        lam = one
        for x in p.passages[i]:
            if x:
                lam = multiply(lam, factor(x))
        w = p.writhes[i]
        corr = mer_inv[i] if w > 0 else mer[i]
        for _ in range(abs(w)):
            lam = multiply(lam, corr)
        longs.append(lam)
    return ReducedLongitudes(n, tuple(longs), rounds)


def _check_index(I: Sequence[int], m: int, n: int) -> MultiIndex:
    I = tuple(I)
    if not I:
        raise IndexError("empty multi-index")
    for i in I:
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= m:
            raise IndexError(f"component index {i!r} out of range 1..{m}")
    if len(I) > n:
        raise LengthOverflow(f"multi-index of length {len(I)} exceeds the bound {n}")
    return I


def mu(rl: ReducedLongitudes, I: Sequence[int]) -> int:
    I = _check_index(I, rl.component_count, rl.n)
    if len(I) == 1:
        return 0
    return rl.series[I[-1] - 1].coefficient(I[:-1])


def _is_cyclic_subsequence(J: MultiIndex, I: MultiIndex) -> bool:
    """Some rotation of J is a (not necessarily contiguous) subsequence of I."""
    for r in range(len(J)):
        rot = J[r:] + J[:r]
        it = iter(I)
        if all(x in it for x in rot):
            return True
    return False


def _proper_cyclic_subsequences(I: MultiIndex) -> list[MultiIndex]:
    out = set()
    k = len(I)
    for r in range(2, k):
        for pos in itertools.combinations(range(k), r):
            J = tuple(I[p] for p in pos)
            for s in range(r):
                out.add(J[s:] + J[:s])
    return sorted(out, key=lambda J: (len(J), J))


def delta(context: Callable[[MultiIndex], int] | Mapping[MultiIndex, int], I: Sequence[int]) -> int:
    """gcd of ``mu(J)`` over cyclic permutations ``J`` of proper subsequences of ``I``.

    ``context`` maps shorter multi-indices to their ``mu`` (a callable or a
    mapping with missing entries read as zero).  Length-1 ``mu`` is zero.
    """
    I = tuple(I)
    lookup = context if callable(context) else (lambda J: context.get(J, 0))
    g = 0
    for J in _proper_cyclic_subsequences(I):
        g = math.gcd(g, lookup(J))
        if g == 1:
            break
    return g


def mu_bar(mu_value: int, delta_value: int) -> int:
    if delta_value < 0:
        raise ValueError("delta must be nonnegative")
    if delta_value == 0:
        return mu_value
    return mu_value % delta_value


@dataclass(frozen=True)
class MilnorEntry:
    mu: int
    delta: int
    mu_bar: int

    def to_dict(self) -> dict:
        return {"mu": self.mu, "delta": self.delta, "mu_bar": self.mu_bar}


def index_key(I: Sequence[int], m: int) -> str:
    if m < 10:
        return "".join(str(i) for i in I)
    return ",".join(str(i) for i in I)


def parse_index_key(key: str) -> MultiIndex:
    if "," in key:
        return tuple(int(x) for x in key.split(","))
    return tuple(int(c) for c in key)


@dataclass(frozen=True)
class MilnorTable:
    diagram: str
    n: int
    component_count: int
    entries: Mapping[MultiIndex, MilnorEntry]

    def __getitem__(self, I) -> MilnorEntry:
        return self.entries[tuple(I)]

    def indices(self, length: int | None = None) -> list[MultiIndex]:
        if length is None:
            return sorted(self.entries, key=lambda I: (len(I), I))
        return sorted(I for I in self.entries if len(I) == length)

    def mu_bar(self, I) -> int:
        return self.entries[tuple(I)].mu_bar

    def vanishes_through(self, k: int) -> bool:
        return all(e.mu_bar == 0 for I, e in self.entries.items() if len(I) <= k)

    def first_nonvanishing(self) -> tuple[int, list[MultiIndex]] | None:
        for k in range(2, self.n + 1):
            bad = [I for I in self.indices(k) if self.entries[I].mu_bar != 0]
            if bad:
                return k, bad
        return None

    def to_dict(self) -> dict:
        m = self.component_count
        return {
            "diagram": self.diagram,
            "n": self.n,
            "entries": {index_key(I, m): e.to_dict() for I, e in self.entries.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping, component_count: int) -> "MilnorTable":
        entries = {
            parse_index_key(k): MilnorEntry(v["mu"], v["delta"], v["mu_bar"])
            for k, v in data["entries"].items()
        }
        return cls(data.get("diagram", ""), data["n"], component_count, entries)

    def to_text(self, nonzero_only: bool = False) -> str:
        m = self.component_count
        rows = [("I", "mu", "delta", "mu_bar")]
        for I in self.indices():
            e = self.entries[I]
            if nonzero_only and not (e.mu or e.mu_bar):
                continue
            rows.append((index_key(I, m), str(e.mu), str(e.delta), str(e.mu_bar)))
        widths = [max(len(r[c]) for r in rows) for c in range(4)]
        return "\n".join(
            "  ".join(cell.rjust(w) if c else cell.ljust(w) for c, (cell, w) in enumerate(zip(r, widths)))
            for r in rows
        )


def _all_indices(m: int, k: int) -> Iterable[MultiIndex]:
    return itertools.product(range(1, m + 1), repeat=k)


def table_from_longitudes(rl: ReducedLongitudes, digest: str = "") -> MilnorTable:
    m, n = rl.component_count, rl.n
    entries: dict = {}
    nonzero: dict = {}  # shorter multi-indices with mu != 0, by length
    for k in range(2, n + 1):
        shorter = sorted(nonzero.items(), key=lambda kv: (len(kv[0]), kv[0]))
        found = {}
        for I in _all_indices(m, k):
            value = rl.series[I[-1] - 1].coefficient(I[:-1])
            d = 0
            for J, v in shorter:
                if d == 1:
                    break
                if d and v % d == 0:
                    continue
                if _is_cyclic_subsequence(J, I):
                    d = math.gcd(d, v)
            entries[I] = MilnorEntry(value, d, mu_bar(value, d))
            if value:
                found[I] = value
        nonzero.update(found)
    return MilnorTable(digest, n, m, entries)


def table(d: LinkDiagram, n: int) -> MilnorTable:
    """Full (mu, Delta, mu_bar) table for every multi-index of length 2..n."""
    if n < 2:
        raise ValueError("length bound must be at least 2")
    check_degree(n)
    rl = reduce_longitudes(presentation(d), n)
    return table_from_longitudes(rl, d.digest())
