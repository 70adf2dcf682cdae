from hypothesis import given, settings
from hypothesis import strategies as st

from otoric.circuits import canonical_sign, circuits
from otoric.graph import (
    WeightedOrientedGraph,
    incidence_matrix,
    normalize_sink_weights,
    parse_graph,
    serialize_graph,
)
from otoric.oracle import circuits_brute_force


@st.composite
def graphs(draw, max_vertices=6):
    n = draw(st.integers(3, max_vertices))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=2, max_size=min(9, len(pairs)), unique=True))
    flips = draw(st.lists(st.booleans(), min_size=len(chosen), max_size=len(chosen)))
    weights = draw(st.lists(st.integers(1, 4), min_size=n, max_size=n))
    edges = tuple(
        (f"e{k + 1}", f"v{(j if f else i) + 1}", f"v{(i if f else j) + 1}")
        for k, ((i, j), f) in enumerate(zip(chosen, flips))
    )
    return WeightedOrientedGraph(tuple((f"v{i + 1}", w) for i, w in enumerate(weights)), edges)


@settings(max_examples=120, deadline=None)
@given(graphs())
def test_formula_matches_brute_force(D):
    mine = sorted(canonical_sign(c.exponents) for c in circuits(D))
    assert mine == circuits_brute_force(incidence_matrix(D))


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_sink_weights_irrelevant(D):
    assert [c.exponents for c in circuits(D)] == [c.exponents for c in circuits(normalize_sink_weights(D))]


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_serialization_roundtrip(D):
    assert parse_graph(serialize_graph(D)) == D


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_supports_avoid_leaves(D):
    leaves = {v for v in D.vertex_ids if D.degree(v) == 1}
    for c in circuits(D):
        for (e, t, h), x in zip(D.edges, c.exponents):
            if t in leaves or h in leaves:
                assert x == 0
