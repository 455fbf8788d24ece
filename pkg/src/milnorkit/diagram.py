"""Oriented, ordered link diagrams.

A diagram lists each component as the cyclic sequence of its arcs in
traversal order, where an *arc* is a piece of the component between two
consecutive crossing passages (over or under).  Every crossing records the
incoming and outgoing arcs of both strands plus an explicit sign.  Signs use
the right-handed = +1 convention: a crossing is positive when rotating the
over strand's direction counter-clockwise by less than a half turn aligns it
with the under strand.

Diagrams are canonicalised on construction: arcs are renumbered ``0..A-1``
in component order and crossings are sorted by their incoming under arc,
so equal diagrams serialise to equal bytes.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Mapping, Sequence

import numpy as np

from .errors import InvalidDiagram, ParseError

__all__ = [
    "Crossing",
    "LinkDiagram",
    "parse_pd",
    "from_dict",
    "parse_braid",
    "braid_closure",
    "linking_matrix",
    "writhe",
    "rebase",
]

_FIELDS = ("over_in", "over_out", "under_in", "under_out", "sign")


@dataclass(frozen=True)
class Crossing:
    over_in: int
    over_out: int
    under_in: int
    under_out: int
    sign: int

    def to_dict(self) -> dict:
        return {f: getattr(self, f) for f in _FIELDS}

    def relabel(self, mapping: Mapping[int, int]) -> "Crossing":
        return Crossing(
            mapping[self.over_in],
            mapping[self.over_out],
            mapping[self.under_in],
            mapping[self.under_out],
            self.sign,
        )


@dataclass(frozen=True)
class LinkDiagram:
    components: tuple[tuple[int, ...], ...]
    crossings: tuple[Crossing, ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def arc_count(self) -> int:
        return sum(len(c) for c in self.components)

    @property
    def base_arcs(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.components)

    @cached_property
    def component_of(self) -> tuple[int, ...]:
        out = [0] * self.arc_count
        for i, comp in enumerate(self.components):
            for a in comp:
                out[a] = i
        return tuple(out)

    @cached_property
    def crossing_after(self) -> dict[int, tuple[Crossing, bool]]:
        """Maps an arc to the crossing it enters and whether it passes over there."""
        out = {}
        for c in self.crossings:
            out[c.over_in] = (c, True)
            out[c.under_in] = (c, False)
        return out

    def to_dict(self) -> dict:
        return {
            "components": [list(c) for c in self.components],
            "crossings": [c.to_dict() for c in self.crossings],
        }

    def canonical_bytes(self) -> bytes:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":")).encode()

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_bytes()).hexdigest()

    def to_json(self, indent: int | None = None) -> str:
        if indent is None:
            return self.canonical_bytes().decode()
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)


# ---------------------------------------------------------------------------
# parsing and validation


def _as_arc(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ParseError(f"{where}: arc ids must be nonnegative integers, got {value!r}")
    return value


def parse_pd(text: str | bytes) -> LinkDiagram:
    """Parse a PD JSON document into a validated, canonical diagram."""
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    return from_dict(data)


def from_dict(data: Any) -> LinkDiagram:
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    missing = {"components", "crossings"} - set(data)
    if missing:
        raise ParseError(f"missing keys: {sorted(missing)}")
    comps_raw, xs_raw = data["components"], data["crossings"]
    if not isinstance(comps_raw, list) or not isinstance(xs_raw, list):
        raise ParseError("components and crossings must be lists")
    if not comps_raw:
        raise ParseError("no components")

    components = []
    for i, comp in enumerate(comps_raw):
        if not isinstance(comp, list) or not comp:
            raise ParseError(f"component {i} must be a nonempty list of arc ids")
        components.append(tuple(_as_arc(a, f"component {i}") for a in comp))

    crossings = []
    for k, x in enumerate(xs_raw):
        if not isinstance(x, dict):
            raise ParseError(f"crossing {k} must be an object")
        lacking = [f for f in _FIELDS if f not in x]
        if lacking:
            raise ParseError(f"crossing {k} lacks {lacking}")
        sign = x["sign"]
        if isinstance(sign, bool) or sign not in (1, -1):
            raise ParseError(f"crossing {k}: sign must be 1 or -1, got {sign!r}")
        crossings.append(
            Crossing(*(_as_arc(x[f], f"crossing {k}") for f in _FIELDS[:4]), sign)
        )

    _validate(components, crossings)
    return _canonicalise(components, crossings)


def _validate(components: Sequence[tuple[int, ...]], crossings: Sequence[Crossing]) -> None:
    owner: dict[int, int] = {}
    succ: dict[int, int] = {}
    for i, comp in enumerate(components):
        for pos, a in enumerate(comp):
            if a in owner:
                raise InvalidDiagram(f"arc {a} is listed more than once")
            owner[a] = i
            succ[a] = comp[(pos + 1) % len(comp)]

    ins: dict[int, int] = {}
    outs: dict[int, int] = {}
    for k, c in enumerate(crossings):
        for f in _FIELDS[:4]:
            a = getattr(c, f)
            if a not in owner:
                raise InvalidDiagram(f"crossing {k} references arc {a}, which no component lists")
        for a in (c.over_in, c.under_in):
            ins[a] = ins.get(a, 0) + 1
        for a in (c.over_out, c.under_out):
            outs[a] = outs.get(a, 0) + 1
        if succ[c.over_in] != c.over_out:
            raise InvalidDiagram(
                f"crossing {k}: over strand arcs {c.over_in} -> {c.over_out} are not consecutive"
            )
        if succ[c.under_in] != c.under_out:
            raise InvalidDiagram(
                f"crossing {k}: under strand arcs {c.under_in} -> {c.under_out} are not consecutive"
            )

    for i, comp in enumerate(components):
        touched = [a for a in comp if a in ins or a in outs]
        if not touched:
            if len(comp) != 1:
                raise InvalidDiagram(
                    f"component {i} has no crossings but {len(comp)} arcs (arc {comp[1]} is extra)"
                )
            continue
        for a in comp:
            if ins.get(a, 0) != 1:
                raise InvalidDiagram(f"arc {a} enters {ins.get(a, 0)} crossings, expected 1")
            if outs.get(a, 0) != 1:
                raise InvalidDiagram(f"arc {a} leaves {outs.get(a, 0)} crossings, expected 1")


def _canonicalise(components, crossings) -> LinkDiagram:
    mapping = {}
    for comp in components:
        for a in comp:
            mapping[a] = len(mapping)
    comps = tuple(tuple(mapping[a] for a in comp) for comp in components)
    xs = sorted((c.relabel(mapping) for c in crossings), key=lambda c: c.under_in)
    return LinkDiagram(comps, tuple(xs))


def rebase(d: LinkDiagram, component: int, shift: int = 1) -> LinkDiagram:
    """Same link with the base arc of one component moved ``shift`` arcs along."""
    if not 0 <= component < d.component_count:
        raise IndexError(f"component {component} out of range")
    comps = list(d.components)
    c = comps[component]
    k = shift % len(c)
    comps[component] = c[k:] + c[:k]
    return _canonicalise(comps, d.crossings)


# ---------------------------------------------------------------------------
# braids

_BRAID_TOKEN = re.compile(r"^s(\d+)(\^(-?1))?$")


def parse_braid(word: str, strands: int) -> LinkDiagram:
    """Diagram of the closure of a braid word such as ``"s1 s2^-1 s1"``."""
    if isinstance(strands, bool) or not isinstance(strands, int) or strands < 1:
        raise ParseError(f"strand count must be a positive integer, got {strands!r}")
    gens = []
    for tok in word.split():
        m = _BRAID_TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad braid token {tok!r}")
        k = int(m.group(1))
        if k < 1 or k >= strands:
            raise IndexError(f"generator s{k} needs 1 <= k < {strands}")
        gens.append(k if m.group(3) != "-1" else -k)
    return braid_closure(gens, strands)


def braid_closure(gens: Sequence[int], strands: int) -> LinkDiagram:
    """Closure of a braid given as signed generator indices.

    Strands run downward; ``s_k`` is the positive crossing in which the strand
    entering at position ``k+1`` passes over the one entering at ``k``.
    """
    current = list(range(strands))
    next_id = strands
    raw: list[Crossing] = []
    for g in gens:
        left, right = abs(g) - 1, abs(g)
        left_in, right_in = current[left], current[right]
        left_out, right_out = next_id, next_id + 1
        next_id += 2
        if g > 0:
            raw.append(Crossing(right_in, right_out, left_in, left_out, 1))
        else:
            raw.append(Crossing(left_in, left_out, right_in, right_out, -1))
        current[right], current[left] = left_out, right_out

    alias = {current[p]: p for p in range(strands) if current[p] != p}
    fix = lambda a: alias.get(a, a)  # noqa: E731
    crossings = [
        Crossing(fix(c.over_in), fix(c.over_out), fix(c.under_in), fix(c.under_out), c.sign)
        for c in raw
    ]
    succ = {}
    for c in crossings:
        succ[c.over_in] = c.over_out
        succ[c.under_in] = c.under_out

    components = []
    seen: set[int] = set()
    for p in range(strands):
        if p in seen:
            continue
        comp = [p]
        seen.add(p)
        a = succ.get(p)
        while a is not None and a != p:
            comp.append(a)
            seen.add(a)
            a = succ[a]
        components.append(comp)
    return from_dict({"components": components, "crossings": [c.to_dict() for c in crossings]})


# ---------------------------------------------------------------------------
# combinatorial queries


def linking_matrix(d: LinkDiagram) -> np.ndarray:
    """Symmetric integer matrix of pairwise linking numbers."""
    m = d.component_count
    twice = np.zeros((m, m), dtype=np.int64)
    comp = d.component_of
    for c in d.crossings:
        i, j = comp[c.over_in], comp[c.under_in]
        if i != j:
            twice[i, j] += c.sign
            twice[j, i] += c.sign
    if np.any(twice % 2):
        raise InvalidDiagram("odd inter-component crossing sum; diagram is not planar")
    return twice // 2


def writhe(d: LinkDiagram, component: int) -> int:
    """Sum of the signs of the self-crossings of one component."""
    comp = d.component_of
    return sum(
        c.sign
        for c in d.crossings
        if comp[c.over_in] == component and comp[c.under_in] == component
    )
