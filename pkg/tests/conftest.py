import random

import pytest

from otoric.graph import WeightedOrientedGraph


def random_graph(rng: random.Random, max_vertices=8, max_edges=12, max_weight=4) -> WeightedOrientedGraph:
    n = rng.randint(3, max_vertices)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    top = min(max_edges, len(pairs))
    m = rng.randint(max(n - 1, top - 3), top)
    edges = []
    for k, (i, j) in enumerate(rng.sample(pairs, m)):
        if rng.random() < 0.5:
            i, j = j, i
        edges.append((f"e{k + 1}", f"v{i + 1}", f"v{j + 1}"))
    vertices = tuple((f"v{i + 1}", rng.randint(1, max_weight)) for i in range(n))
    return WeightedOrientedGraph(vertices, tuple(edges))


def random_corpus(seed: int, count: int, **kw) -> list[WeightedOrientedGraph]:
    rng = random.Random(seed)
    return [random_graph(rng, **kw) for _ in range(count)]


def sparse_graph(rng: random.Random, n: int, extra: int, max_weight=4) -> WeightedOrientedGraph:
    """Random spanning tree plus ``extra`` chords: few cycles, so many graphs land in the robust class."""
    edges = []
    seen = set()
    for v in range(1, n):
        u = rng.randrange(v)
        seen.add(frozenset((u, v)))
        edges.append((u, v))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if frozenset((i, j)) not in seen]
    edges += rng.sample(pairs, min(extra, len(pairs)))
    oriented = []
    for k, (i, j) in enumerate(edges):
        if rng.random() < 0.5:
            i, j = j, i
        oriented.append((f"e{k + 1}", f"v{i + 1}", f"v{j + 1}"))
    vertices = tuple((f"v{i + 1}", rng.randint(1, max_weight)) for i in range(n))
    return WeightedOrientedGraph(vertices, tuple(oriented))


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(2024, 60)
