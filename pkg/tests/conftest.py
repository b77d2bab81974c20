from __future__ import annotations

import random

import pytest

from interchange.embedding import EmbeddedGraph


def random_cyclic_order(rng: random.Random, n: int) -> list[int]:
    rest = list(range(1, n))
    rng.shuffle(rest)
    return [0, *rest]


def random_dipole(rng: random.Random, n: int) -> EmbeddedGraph:
    return EmbeddedGraph.dipole(random_cyclic_order(rng, n), random_cyclic_order(rng, n))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261018)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
