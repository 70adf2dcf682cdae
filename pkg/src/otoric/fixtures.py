"""Small named graphs shipped with the package (``otoric --fixtures NAME``).

``c8`` is a balanced 8-cycle and ``theta`` two unbalanced 4-cycles sharing a
path; the rest are small hand-made shapes used by the tests and the CLI.
"""

from __future__ import annotations

from .graph import WeightedOrientedGraph


def _graph(weights, edges) -> WeightedOrientedGraph:
    vertices = tuple((f"v{i + 1}", w) for i, w in enumerate(weights))
    es = tuple((f"e{j + 1}", f"v{t}", f"v{h}") for j, (t, h) in enumerate(edges))
    return WeightedOrientedGraph(vertices, es)


def c8() -> WeightedOrientedGraph:
    """Balanced 8-cycle with weights (4, 3, 2, 1, 36, 7, 6, 1)."""
    return _graph(
        (4, 3, 2, 1, 36, 7, 6, 1),
        [(2, 1), (3, 2), (4, 3), (4, 5), (5, 6), (7, 6), (8, 7), (8, 1)],
    )


def theta() -> WeightedOrientedGraph:
    """Two 4-cycles sharing the path v1-v2-v3, weights (1, 2, 3, 4, 5)."""
    return _graph((1, 2, 3, 4, 5), [(1, 2), (2, 3), (4, 3), (1, 4), (5, 3), (1, 5)])


def bowtie() -> WeightedOrientedGraph:
    """Two all-ones triangles sharing v1."""
    return _graph((1,) * 5, [(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5)])


def weighted_bowtie() -> WeightedOrientedGraph:
    """Triangles sharing v1; the first has det 3 through w(v3) = 2 and e3 = v3 -> v1."""
    return _graph((1, 1, 2, 1, 1), [(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (1, 5)])


def dumbbell() -> WeightedOrientedGraph:
    """All-ones triangles v1v2v3 and v4v5v6 joined by the bridge e4 = v1 -> v4."""
    return _graph((1,) * 6, [(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (5, 6), (4, 6)])


def weighted_theta() -> WeightedOrientedGraph:
    """Triangles v1v2v3 (det 3) and v1v2v4 (det 2) sharing e1; outer 4-cycle has det 1."""
    return _graph((1, 1, 2, 1), [(1, 2), (2, 3), (3, 1), (2, 4), (1, 4)])


def ones_theta() -> WeightedOrientedGraph:
    """All-ones triangles sharing an edge; the outer 4-cycle is balanced."""
    return _graph((1,) * 4, [(1, 2), (2, 3), (1, 3), (2, 4), (1, 4)])


def windmill() -> WeightedOrientedGraph:
    """Three all-ones triangles sharing v1: three unbalanced cycles."""
    return _graph(
        (1,) * 7,
        [(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5), (1, 6), (6, 7), (1, 7)],
    )


FIXTURES = {
    "c8": c8,
    "theta": theta,
    "bowtie": bowtie,
    "weighted-bowtie": weighted_bowtie,
    "dumbbell": dumbbell,
    "weighted-theta": weighted_theta,
    "ones-theta": ones_theta,
    "windmill": windmill,
}


def get_fixture(name: str) -> WeightedOrientedGraph:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
