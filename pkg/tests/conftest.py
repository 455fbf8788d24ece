import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from milnorkit.data import corpus  # noqa: E402
from milnorkit.words import FreeWord, reduce  # noqa: E402


@pytest.fixture(scope="session")
def links():
    return corpus()


def random_word(rng: random.Random, rank: int, max_len: int) -> FreeWord:
    n = rng.randint(0, max_len)
    letters = [rng.choice([1, -1]) * rng.randint(1, rank) for _ in range(n)]
    return reduce(letters, rank)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            if rep.when != "call":
                continue
            for name, value in getattr(rep, "user_properties", []):
                if name == "criterion":
                    lines.append((value, "PASS" if rep.passed else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for label, status in sorted(lines):
            terminalreporter.write_line(f"{status}  {label}")
