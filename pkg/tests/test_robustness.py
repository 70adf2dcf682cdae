import pytest

from otoric.errors import ArgumentError, OutOfClassError
from otoric.fixtures import get_fixture
from otoric.graph import WeightedOrientedGraph
from otoric.robustness import betti_table, check_robust_class, mu_of


def test_betti_table():
    assert betti_table(0) == [1]
    assert betti_table(3) == [1, 3, 3, 1]
    with pytest.raises(ArgumentError):
        betti_table(-1)


@pytest.mark.parametrize(
    "name, mu",
    [("c8", 1), ("bowtie", 1), ("dumbbell", 1), ("ones-theta", 1)],
)
def test_in_class_fixtures(name, mu):
    r = check_robust_class(get_fixture(name))
    assert r.in_class
    assert r.mu == mu == r.case_table_mu
    assert r.betti == betti_table(mu)
    assert r.projective_dimension == mu
    assert not r.warnings


@pytest.mark.parametrize("name", ["theta", "weighted-theta", "windmill"])
def test_three_unbalanced_cycles_out_of_class(name):
    r = check_robust_class(get_fixture(name))
    assert not r.in_class
    assert "more than two unbalanced" in r.violated_condition
    with pytest.raises(OutOfClassError):
        mu_of(get_fixture(name))


def test_forest_is_zero_ideal():
    D = WeightedOrientedGraph((("a", 2), ("b", 1), ("c", 3)), (("x", "a", "b"), ("y", "c", "b")))
    r = check_robust_class(D)
    assert r.in_class and r.zero_ideal
    assert r.betti == [1]


def test_two_balanced_cycles_sharing_edge():
    # all-ones K_{2,3}: three balanced 4-cycles pairwise sharing two edges
    vs = tuple((v, 1) for v in ("a", "b", "x", "y", "z"))
    es = (("e1", "a", "x"), ("e2", "x", "b"), ("e3", "a", "y"), ("e4", "y", "b"), ("e5", "a", "z"), ("e6", "z", "b"))
    r = check_robust_class(WeightedOrientedGraph(vs, es))
    assert r.balanced_cycle_count == 3
    assert not r.in_class
    assert "share" in r.violated_condition


def test_two_disjoint_balanced_cycles_in_class():
    c8 = get_fixture("c8")
    # second copy of the balanced 8-cycle with renamed ids, joined by a bridge
    ren = {f"v{i}": f"u{i}" for i in range(1, 9)}
    vs = c8.vertices + tuple((ren[v], w) for v, w in c8.vertices)
    es = c8.edges + tuple((f"f{e[1:]}", ren[t], ren[h]) for e, t, h in c8.edges) + (("b", "v1", "u1"),)
    r = check_robust_class(WeightedOrientedGraph(vs, es))
    assert r.in_class and r.mu == 2
    assert r.betti == [1, 2, 1]


def test_two_balanced_cycles_sharing_a_vertex():
    c8 = get_fixture("c8")
    ren = {v: (v if v == "v1" else "u" + v[1:]) for v in c8.vertex_ids}
    vs = c8.vertices + tuple((ren[v], w) for v, w in c8.vertices if v != "v1")
    es = c8.edges + tuple((f"f{e[1:]}", ren[t], ren[h]) for e, t, h in c8.edges)
    r = check_robust_class(WeightedOrientedGraph(vs, es))
    assert r.balanced_cycle_count == 2 and r.in_class
    assert r.mu == 2 and r.case_table_mu == 2
