"""Wirtinger presentation of a link group with its peripheral structure.

Generator ``g_a`` (FreeWord letter ``a + 1``) is the meridian loop around arc
``a``.  Loops are based above the diagram and products read left to right.
At a crossing of sign ``e`` with over arc ``o``, pushing the loop around the
under strand past the over strand conjugates it:

    g_{under_out} = g_o^-e  g_{under_in}  g_o^e

and the over strand keeps its generator (``g_{over_out} = g_{over_in}``).
Walking a component from its base arc, every arc is therefore
``P^-1 m P`` where ``m`` is the base-arc meridian and ``P`` is the product,
in traversal order, of the letters ``g_o^e`` met at under passages.  After a
full turn ``P`` commutes with ``m``; multiplying by ``m^-w`` (``w`` the
writhe) gives the preferred longitude.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LinkDiagram, writhe
from .words import FreeWord, reduce

__all__ = ["GroupPresentation", "presentation", "longitude", "traversal_letters"]


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relators: tuple[FreeWord, ...]
    meridians: tuple[int, ...]  # 1-based generator of each base arc
    longitudes: tuple[FreeWord, ...]
    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    # per component, one entry per passage in traversal order: the signed
    # generator picked up there, or 0 at an over passage
    passages: tuple[tuple[int, ...], ...]
    writhes: tuple[int, ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    def conjugator(self, arc: int) -> FreeWord:
        """``P`` with ``g_arc = P^-1 m P`` for the arc's component meridian ``m``."""
        i = self.component_of[arc]
        k = self.components[i].index(arc)
        return reduce([x for x in self.passages[i][:k] if x], self.generator_count)

    def dump(self) -> str:
        lines = [f"gens: {self.generator_count}"]
        lines += [f"rel: {_text(r)}" for r in self.relators]
        lines += [f"mer[{i}]: g{g - 1}" for i, g in enumerate(self.meridians)]
        lines += [f"lon[{i}]: {_text(w)}" for i, w in enumerate(self.longitudes)]
        return "\n".join(lines)


def _text(w: FreeWord) -> str:
    if not w.letters:
        return "1"
    return " ".join(f"g{abs(a) - 1}" + ("" if a > 0 else "^-1") for a in w.letters)


def traversal_letters(d: LinkDiagram, i: int) -> tuple[int, ...]:
    """Letters met walking component ``i`` from its base arc (0 = over passage)."""
    if not 0 <= i < d.component_count:
        raise IndexError(f"component {i} out of range")
    comp = d.components[i]
    if len(comp) == 1 and comp[0] not in d.crossing_after:
        return ()
    out = []
    for a in comp:
        c, over = d.crossing_after[a]
        out.append(0 if over else c.sign * (c.over_in + 1))
    return tuple(out)


def longitude(d: LinkDiagram, i: int) -> FreeWord:
    """Preferred longitude of component ``i`` as a word in arc generators."""
    letters = [x for x in traversal_letters(d, i) if x]
    w = writhe(d, i)
    meridian = d.components[i][0] + 1
    letters += [-meridian if w > 0 else meridian] * abs(w)
    return reduce(letters, d.arc_count)


def presentation(d: LinkDiagram) -> GroupPresentation:
    rank = d.arc_count
    relators = []
    for c in d.crossings:
        o, e = c.over_in + 1, c.sign
        ui, uo = c.under_in + 1, c.under_out + 1
        # g_uo * (g_o^-e g_ui g_o^e)^-1
        relators.append(reduce([uo, -e * o, -ui, e * o], rank))
    for c in d.crossings:
        if c.over_in != c.over_out:
            relators.append(reduce([c.over_out + 1, -(c.over_in + 1)], rank))
    n = d.component_count
    return GroupPresentation(
        generator_count=rank,
        relators=tuple(relators),
        meridians=tuple(comp[0] + 1 for comp in d.components),
        longitudes=tuple(longitude(d, i) for i in range(n)),
        component_of=d.component_of,
        components=d.components,
        passages=tuple(traversal_letters(d, i) for i in range(n)),
        writhes=tuple(writhe(d, i) for i in range(n)),
    )
