"""Basing predicates for links in the 3-sphere, read off Milnor tables.

A link admits an n-basing relative to the unlink exactly when its mu-bar
invariants of length <= n vanish, and two links whose invariants vanish
through length n admit an (n+1)-basing relative to each other exactly when
their length n+1 invariants agree.  The functions here turn those
equivalences into searches over a bounded length ``cap``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .config import DEFAULT_CAP, AtLeast, check_degree
from .diagram import LinkDiagram
from .errors import ComponentMismatch, HypothesisUnmet
from .milnor import MilnorTable, index_key, reduce_longitudes, table_from_longitudes
from .wirtinger import presentation

__all__ = [
    "BasingReport",
    "max_basing_rel_unlink",
    "free_quotient_depth",
    "relative_max_basing",
    "mu_n_equal",
]


@dataclass(frozen=True)
class BasingReport:
    subjects: tuple[str, ...]
    max_basing: int | AtLeast
    obstruction: tuple[int, ...] | None
    cap: int
    component_count: int
    hypothesis_met: bool | None = None  # only meaningful in relative mode

    @property
    def capped(self) -> bool:
        return isinstance(self.max_basing, AtLeast)

    def to_dict(self) -> dict:
        out = {
            "max_basing": str(self.max_basing) if self.capped else self.max_basing,
            "capped": self.capped,
            "obstruction": (
                None if self.obstruction is None else index_key(self.obstruction, self.component_count)
            ),
            "cap": self.cap,
            "subjects": list(self.subjects),
        }
        if self.hypothesis_met is not None:
            out["hypothesis_met"] = self.hypothesis_met
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _check_cap(cap: int) -> None:
    if isinstance(cap, bool) or not isinstance(cap, int) or cap < 2:
        raise ValueError(f"cap must be an integer >= 2, got {cap!r}")
    check_degree(cap)


def _table(d: LinkDiagram, n: int) -> MilnorTable:
    return table_from_longitudes(reduce_longitudes(presentation(d), n), d.digest())


def _first_nonzero(t: MilnorTable):
    hit = t.first_nonvanishing()
    if hit is None:
        return None
    k, bad = hit
    return k, bad[0]


def max_basing_rel_unlink(d: LinkDiagram, cap: int = DEFAULT_CAP) -> BasingReport:
    """Largest n <= cap with every mu-bar of length <= n zero."""
    _check_cap(cap)
    t = _table(d, cap)
    hit = _first_nonzero(t)
    if hit is None:
        return BasingReport((t.diagram,), AtLeast(cap), None, cap, t.component_count)
    k, I = hit
    return BasingReport((t.diagram,), k - 1, I, cap, t.component_count)


def free_quotient_depth(d: LinkDiagram, cap: int = DEFAULT_CAP) -> int | AtLeast:
    """Largest k with the k-th lower central quotients of the link group and the free group agreeing."""
    report = max_basing_rel_unlink(d, cap)
    if report.capped:
        return AtLeast(cap)
    return report.max_basing + 1


def _agree(x, y) -> bool:
    g = math.gcd(x.delta, y.delta)
    if g == 0:
        return x.mu_bar == y.mu_bar
    return (x.mu_bar - y.mu_bar) % g == 0


def _check_components(a: LinkDiagram, b: LinkDiagram) -> None:
    if a.component_count != b.component_count:
        raise ComponentMismatch(
            f"links have {a.component_count} and {b.component_count} components"
        )


def relative_max_basing(a: LinkDiagram, b: LinkDiagram, cap: int = DEFAULT_CAP) -> BasingReport:
    """Largest n <= cap such that the two tables agree (mod gcd of the Deltas) through length n.

    ``hypothesis_met`` is False when either table has a nonzero entry below
    the reported length; then the result states table agreement only.
    """
    _check_components(a, b)
    _check_cap(cap)
    ta, tb = _table(a, cap), _table(b, cap)
    m = ta.component_count
    first_diff = None
    for k in range(2, cap + 1):
        bad = [I for I in ta.indices(k) if not _agree(ta[I], tb[I])]
        if bad:
            first_diff = (k, bad[0])
            break
    top = cap if first_diff is None else first_diff[0] - 1
    # agreement at length top certifies a basing only if both vanish below it
    met = all(ta[I].mu_bar == 0 and tb[I].mu_bar == 0 for I in ta.entries if len(I) < top)
    if first_diff is None:
        return BasingReport((ta.diagram, tb.diagram), AtLeast(cap), None, cap, m, met)
    k, I = first_diff
    return BasingReport((ta.diagram, tb.diagram), k - 1, I, cap, m, met)


def mu_n_equal(a: LinkDiagram, b: LinkDiagram, n: int) -> bool:
    """Whether the length n+1 invariants agree, given both vanish through length n."""
    _check_components(a, b)
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    check_degree(n + 1)
    ta, tb = _table(a, n + 1), _table(b, n + 1)
    failing = [
        I
        for I in ta.indices()
        if len(I) <= n and (ta[I].mu_bar != 0 or tb[I].mu_bar != 0)
    ]
    if failing:
        I = failing[0]
        raise HypothesisUnmet(
            f"mu-bar({index_key(I, ta.component_count)}) is nonzero", index=I
        )
    return all(_agree(ta[I], tb[I]) for I in ta.indices(n + 1))
