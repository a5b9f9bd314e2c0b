import random

import pytest

from config.settings import settings
from graphs.constructions import build_d_star, build_k6_geometric, build_k_star
from graphs.ecgraph import ColoredGraph, random_proper_coloring

CORPUS_SIZE = 220


@pytest.fixture(scope="session")
def corpus() -> list[ColoredGraph]:
    """Fixed-seed random proper colorings with n <= 10."""
    rng = random.Random(settings.DEFAULT_SEED)
    graphs = []
    for _ in range(CORPUS_SIZE):
        n = rng.randint(2, 10)
        p = rng.choice([0.3, 0.5, 0.7, 1.0])
        graphs.append(random_proper_coloring(n, p, rng, extra_colors=rng.randint(0, 3)))
    return graphs


@pytest.fixture(scope="session")
def small_corpus(corpus) -> list[ColoredGraph]:
    """Graphs cheap enough for the brute-force oracles."""
    return [g for g in corpus if g.n <= 7]


@pytest.fixture(scope="session")
def d3() -> ColoredGraph:
    return build_d_star(3)


@pytest.fixture(scope="session")
def k3() -> ColoredGraph:
    return build_k_star(3)


@pytest.fixture(scope="session")
def k6() -> ColoredGraph:
    return build_k6_geometric()
