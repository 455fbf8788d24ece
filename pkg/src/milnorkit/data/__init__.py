"""Small corpus of link diagrams shipped with the package."""

from __future__ import annotations

from importlib import resources

from ..diagram import LinkDiagram, parse_pd

NAMES = ("hopf", "hopf4", "borromean", "whitehead", "unlink2", "unlink3")


def corpus_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown corpus link {name!r}; known: {', '.join(NAMES)}")
    return resources.files(__name__).joinpath(f"{name}.json").read_text()


def load(name: str) -> LinkDiagram:
    return parse_pd(corpus_text(name))


def corpus() -> dict[str, LinkDiagram]:
    return {name: load(name) for name in NAMES}
