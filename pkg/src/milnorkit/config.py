"""Global limits.  ``MILNORKIT_MAX_DEGREE`` overrides the degree ceiling."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import DegreeOverflow

VERSION = "0.1.0"

DEFAULT_MAX_DEGREE = 8
MAX_GROUP_ORDER = 24
DEFAULT_CAP = 6


def max_degree() -> int:
    raw = os.environ.get("MILNORKIT_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"MILNORKIT_MAX_DEGREE must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("MILNORKIT_MAX_DEGREE must be positive")
    return value


def check_degree(n: int, what: str = "degree") -> None:
    limit = max_degree()
    if n > limit:
        raise DegreeOverflow(f"{what} {n} exceeds the configured maximum {limit}")


@dataclass(frozen=True)
class AtLeast:
    """A search result that hit its cap: the true value is ``>= bound``.

    Compares against ints as "at least bound", so ``AtLeast(8) >= 5`` holds.
    """

    bound: int

    def __str__(self) -> str:
        return f"≥{self.bound}"

    def __eq__(self, other):
        if isinstance(other, AtLeast):
            return self.bound == other.bound
        return NotImplemented

    def __hash__(self):
        return hash(("AtLeast", self.bound))

    def __lt__(self, other):
        if isinstance(other, AtLeast):
            return self.bound < other.bound
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, AtLeast):
            return self.bound > other.bound
        if isinstance(other, int):
            return self.bound > other
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, AtLeast):
            return self.bound >= other.bound
        if isinstance(other, int):
            return self.bound >= other
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, AtLeast):
            return self.bound <= other.bound
        if isinstance(other, int):
            return False
        return NotImplemented
