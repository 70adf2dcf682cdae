"""Closed-form circuit binomials from incidence-matrix minors.

Each generator takes labelled subgraphs, re-anchors them the way its formula
requires, evaluates the minors, divides by the gcd and returns the vector in
the parent graph's edge order with the canonical sign (first nonzero entry
positive).
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Callable, Mapping, Sequence

from .cycles import (
    CircuitSupport,
    CycleSubgraph,
    PathSubgraph,
    SupportKind,
    find_circuit_supports,
    is_balanced,
)
from .errors import (
    ArgumentError,
    BalancedOuterCycleError,
    SupportShapeError,
    UnbalancedCycleError,
    UnbalancedCycleRequiredError,
)
from .graph import WeightedOrientedGraph
from .linalg import det, minor

log = logging.getLogger(__name__)

__all__ = [
    "BinomialVector",
    "Binomial",
    "Circuit",
    "gcd_normalize",
    "canonical_sign",
    "balanced_cycle_generator",
    "shared_vertex_generator",
    "path_connected_generator",
    "shared_path_generator",
    "generate",
    "labelling_variants",
    "circuits",
    "render_binomial",
]


def gcd_normalize(v: Sequence[int]) -> tuple[int, ...]:
    g = reduce(gcd, v, 0)
    if g == 0:
        raise ArgumentError("cannot normalize the zero vector")
    return tuple(x // g for x in v)


def canonical_sign(v: Sequence[int]) -> tuple[int, ...]:
    lead = next((x for x in v if x), 0)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


@dataclass(frozen=True)
class BinomialVector:
    """Primitive exponent vector indexed by the parent graph's edge order."""

    exponents: tuple[int, ...]
    support: CircuitSupport = field(compare=False)
    trace: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def graph(self) -> WeightedOrientedGraph:
        return self.support.graph

    @property
    def support_edges(self) -> frozenset[str]:
        ids = self.graph.edge_ids
        return frozenset(ids[j] for j, x in enumerate(self.exponents) if x)

    def binomial(self) -> "Binomial":
        return Binomial.from_vector(self.exponents, self.graph.edge_ids)


@dataclass(frozen=True)
class Binomial:
    """``plus - minus`` with each side an ordered tuple of (edge id, exponent)."""

    plus: tuple[tuple[str, int], ...]
    minus: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if {e for e, _ in self.plus} & {e for e, _ in self.minus}:
            raise ArgumentError("binomial sides must have disjoint supports")
        if any(x <= 0 for _, x in self.plus + self.minus):
            raise ArgumentError("exponents must be positive")

    @classmethod
    def from_vector(cls, v: Sequence[int], edge_ids: Sequence[str]) -> "Binomial":
        if len(v) != len(edge_ids):
            raise ArgumentError("vector and edge list differ in length")
        plus = tuple((e, x) for e, x in zip(edge_ids, v) if x > 0)
        minus = tuple((e, -x) for e, x in zip(edge_ids, v) if x < 0)
        return cls(plus, minus)

    def to_vector(self, edge_ids: Sequence[str]) -> tuple[int, ...]:
        vals = dict(self.plus)
        vals.update((e, -x) for e, x in self.minus)
        return tuple(vals.get(e, 0) for e in edge_ids)


def render_binomial(b: Binomial, variable_names: Mapping[str, str] | None = None) -> str:
    """Text form such as ``e1^6*e3 - e2^2*e4``; exponent 1 is omitted."""

    def side(terms):
        if not terms:
            return "1"
        parts = []
        for e, x in terms:
            name = variable_names.get(e, e) if variable_names else e
            parts.append(name if x == 1 else f"{name}^{x}")
        return "*".join(parts)

    return f"{side(b.plus)} - {side(b.minus)}"


@dataclass(frozen=True)
class Circuit:
    vector: BinomialVector
    binomial: Binomial
    supports: tuple[CircuitSupport, ...]

    @property
    def support(self) -> CircuitSupport:
        return self.supports[0]

    @property
    def kind(self) -> SupportKind:
        return self.supports[0].kind

    @property
    def exponents(self) -> tuple[int, ...]:
        return self.vector.exponents

    def render(self) -> str:
        return render_binomial(self.binomial)


def _finish(support: CircuitSupport, pieces, trace: dict) -> BinomialVector:
    """Divide by the gcd, embed into parent edge order, fix the sign."""
    D = support.graph
    raw = [x for _, x in pieces]
    d = reduce(gcd, raw, 0)
    trace["raw"] = tuple(raw)
    trace["d"] = d
    full = [0] * len(D.edges)
    for e, x in pieces:
        full[D.edge_index(e)] = x // d
    return BinomialVector(canonical_sign(full), support, trace)


def _row1_minors(C: CycleSubgraph) -> list[int]:
    A = C.matrix()
    return [minor(A, [0], [i]) for i in range(len(C))]


def _endpoint_minors(P: PathSubgraph) -> list[int]:
    """Minors of the path matrix with both end rows and one column removed."""
    A = P.matrix()
    k = P.length
    return [minor(A, [0, k], [i]) for i in range(k)]


def _sgn(i: int) -> int:
    return -1 if i % 2 else 1


def balanced_cycle_generator(C: CycleSubgraph) -> BinomialVector:
    if not is_balanced(C):
        raise UnbalancedCycleError(f"cycle {list(C.vertices)} is unbalanced")
    r = _row1_minors(C)
    pieces = [(e, _sgn(i) * r[i]) for i, e in enumerate(C.edges)]
    return _finish(
        CircuitSupport(SupportKind.BALANCED_CYCLE, (C,)), pieces, {"minors": tuple(r)}
    )


def _require_unbalanced(*cycles: CycleSubgraph) -> None:
    for C in cycles:
        if is_balanced(C):
            raise UnbalancedCycleRequiredError(f"cycle {list(C.vertices)} is balanced")


def _keep_direction(C: CycleSubgraph, start: str) -> CycleSubgraph:
    return C.rotated(start, 1)


def shared_vertex_generator(Cm: CycleSubgraph, Cn: CycleSubgraph) -> BinomialVector:
    """Two unbalanced cycles meeting in a single vertex.

    Both cycles are rotated to start at the shared vertex, keeping the
    traversal direction they were given in.
    """
    support = CircuitSupport(SupportKind.SHARED_VERTEX, (Cm, Cn))
    _require_unbalanced(Cm, Cn)
    (v,) = Cm.vertex_set & Cn.vertex_set
    Cm, Cn = _keep_direction(Cm, v), _keep_direction(Cn, v)
    q, p = det(Cm.matrix()), det(Cn.matrix())
    rm, rn = _row1_minors(Cm), _row1_minors(Cn)
    pieces = [(e, _sgn(i) * p * rm[i]) for i, e in enumerate(Cm.edges)]
    pieces += [(e, -_sgn(i) * q * rn[i]) for i, e in enumerate(Cn.edges)]
    return _finish(support, pieces, {"p": p, "q": q, "minors": (tuple(rm), tuple(rn))})


def path_connected_generator(Cm: CycleSubgraph, P: PathSubgraph, Cn: CycleSubgraph) -> BinomialVector:
    """Two vertex-disjoint unbalanced cycles joined by ``P``, which runs from Cm to Cn."""
    if P.length < 1:
        raise SupportShapeError("path of length 0: use shared_vertex_generator")
    support = CircuitSupport(SupportKind.PATH_CONNECTED, (Cm, Cn), path=P)
    if P.vertices[0] not in Cm.vertex_set or P.vertices[-1] not in Cn.vertex_set:
        raise SupportShapeError("path must start on Cm and end on Cn")
    _require_unbalanced(Cm, Cn)
    k = P.length
    Cm, Cn = _keep_direction(Cm, P.vertices[0]), _keep_direction(Cn, P.vertices[-1])
    q, p = det(Cm.matrix()), det(Cn.matrix())
    AP = P.matrix()
    head_part = minor(AP, [k], [])
    tail_part = minor(AP, [0], [])
    rm, rn, rp = _row1_minors(Cm), _row1_minors(Cn), _endpoint_minors(P)
    pieces = [(e, _sgn(i) * p * head_part * rm[i]) for i, e in enumerate(Cm.edges)]
    pieces += [(e, -_sgn(i) * p * q * rp[i]) for i, e in enumerate(P.edges)]
    pieces += [(e, -_sgn(i + k) * q * tail_part * rn[i]) for i, e in enumerate(Cn.edges)]
    trace = {"p": p, "q": q, "path_minors": (head_part, tail_part, tuple(rp)),
             "minors": (tuple(rm), tuple(rn))}
    return _finish(support, pieces, trace)


def _along_path(C: CycleSubgraph, P: PathSubgraph) -> CycleSubgraph:
    """Rotate C to start at P's first vertex and traverse P's edges first."""
    for direction in (1, -1):
        L = C.rotated(P.vertices[0], direction)
        if L.edges[: P.length] == P.edges:
            return L
    raise SupportShapeError("path is not a segment of the cycle")


def shared_path_generator(
    Cm: CycleSubgraph, Cn: CycleSubgraph, P: PathSubgraph, outer: CycleSubgraph | None = None
) -> BinomialVector:
    """Two unbalanced cycles intersecting exactly in ``P`` (length >= 1), unbalanced outer cycle.

    ``P.vertices[0]`` anchors all labellings.  When ``outer`` is omitted it is
    built from the two cycles.
    """
    k = P.length
    if k < 1:
        raise SupportShapeError("shared path must have at least one edge")
    D = Cm.graph
    if Cm.edge_set & Cn.edge_set != P.edge_set or Cm.vertex_set & Cn.vertex_set != P.vertex_set:
        raise SupportShapeError("cycles must intersect exactly in the path")
    _require_unbalanced(Cm, Cn)
    Cm, Cn = _along_path(Cm, P), _along_path(Cn, P)
    m, n = len(Cm), len(Cn)
    v1 = P.vertices[0]
    rest_m = PathSubgraph(D, Cm.vertices[k:] + (v1,), Cm.edges[k:])
    rest_n = PathSubgraph(D, Cn.vertices[k:] + (v1,), Cn.edges[k:])
    # outer: from v1 back along Cm's remainder, then forward along Cn's remainder
    back = rest_m.reversed()
    labelled_outer = CycleSubgraph(D, back.vertices + rest_n.vertices[1:-1], back.edges + rest_n.edges)
    if outer is not None and outer.edge_set != labelled_outer.edge_set:
        raise SupportShapeError("outer cycle does not match the two cycles and the path")
    outer = outer if outer is not None else labelled_outer
    support = CircuitSupport(SupportKind.SHARED_PATH, (Cm, Cn), path=P, outer=outer)

    s = det(labelled_outer.matrix())
    if s == 0:
        raise BalancedOuterCycleError(
            f"outer cycle {list(labelled_outer.vertices)} is balanced; it carries the circuit"
        )
    q, p = det(Cm.matrix()), det(Cn.matrix())
    rp, rm, rn = _endpoint_minors(P), _endpoint_minors(rest_m), _endpoint_minors(rest_n)
    pieces = [(e, _sgn(i) * s * rp[i]) for i, e in enumerate(P.edges)]
    pieces += [(e, _sgn(i + m - k) * p * rm[i]) for i, e in enumerate(rest_m.edges)]
    pieces += [(e, -_sgn(i + m - k) * q * rn[i]) for i, e in enumerate(rest_n.edges)]
    trace = {"p": p, "q": q, "s": s, "minors": (tuple(rp), tuple(rm), tuple(rn))}
    return _finish(support, pieces, trace)


def generate(support: CircuitSupport) -> BinomialVector:
    """Dispatch a support to the generator for its shape."""
    kind = support.kind
    if kind is SupportKind.BALANCED_CYCLE:
        return balanced_cycle_generator(support.cycles[0])
    a, b = support.cycles
    if kind is SupportKind.SHARED_VERTEX:
        return shared_vertex_generator(a, b)
    P = support.path
    if kind is SupportKind.PATH_CONNECTED:
        if P.vertices[0] in a.vertex_set:
            return path_connected_generator(a, P, b)
        return path_connected_generator(b, P, a)
    return shared_path_generator(a, b, P, support.outer)


def labelling_variants(support: CircuitSupport) -> list[tuple[str, Callable[[], BinomialVector]]]:
    """Every admissible relabelling of a support, as zero-argument generator calls.

    Balanced cycles: every start vertex in both directions.  Two-cycle shapes:
    the cycles' roles swapped, and each cycle traversed both ways where the
    shape leaves the direction free (a shared path fixes it, so there the
    anchor end of the path varies instead).
    """
    kind = support.kind
    if kind is SupportKind.BALANCED_CYCLE:
        return [
            (f"start={L.vertices[0]} next={L.vertices[1]}", lambda L=L: balanced_cycle_generator(L))
            for L in support.cycles[0].labellings()
        ]
    a, b = support.cycles
    P = support.path
    out = []
    if kind is SupportKind.SHARED_PATH:
        for first, second in ((a, b), (b, a)):
            for pp in (P, P.reversed()):
                tag = f"Cm={list(first.vertices)} anchor={pp.vertices[0]}"
                out.append((tag, lambda f=first, s=second, pp=pp: shared_path_generator(f, s, pp)))
        return out
    if kind is SupportKind.SHARED_VERTEX:
        roles = [(a, b, None), (b, a, None)]
    else:
        start_on_a = P.vertices[0] in a.vertex_set
        roles = [(a, b, P if start_on_a else P.reversed()), (b, a, P.reversed() if start_on_a else P)]
    for first, second, path in roles:
        for da in (1, -1):
            for db in (1, -1):
                A = first.rotated(first.vertices[0], da)
                B = second.rotated(second.vertices[0], db)
                tag = f"Cm={list(A.vertices)} Cn={list(B.vertices)}"
                if path is None:
                    out.append((tag, lambda A=A, B=B: shared_vertex_generator(A, B)))
                else:
                    out.append((tag, lambda A=A, B=B, p=path: path_connected_generator(A, p, B)))
    return out


def circuits(D: WeightedOrientedGraph, jobs: int = 1, diagnostics: list[str] | None = None) -> list[Circuit]:
    """All circuit binomials of D, deduplicated, in canonical support order."""
    supports = find_circuit_supports(D, diagnostics)
    if jobs > 1 and len(supports) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            vectors = list(pool.map(generate, supports))
    else:
        vectors = [generate(s) for s in supports]
    seen: dict[tuple[int, ...], list] = {}
    for s, v in zip(supports, vectors):
        if v.exponents in seen:
            seen[v.exponents][1].append(s)
        else:
            seen[v.exponents] = [v, [s]]
    return [Circuit(v, v.binomial(), tuple(ss)) for v, ss in seen.values()]
