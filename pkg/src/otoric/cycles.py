"""Cycles of the underlying undirected graph and circuit-supporting shapes.

A cycle or path is stored in its *usual labelling*: edge ``i`` joins vertex
``i`` and vertex ``i + 1`` (indices taken cyclically for cycles).  Orientation
of the parent edges plays no role in which subgraphs are cycles; it only
enters through the incidence entries.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Iterator

from .errors import ArgumentError, SupportShapeError
from .graph import WeightedOrientedGraph
from .linalg import IntMatrix, det

log = logging.getLogger(__name__)

__all__ = [
    "CycleSubgraph",
    "PathSubgraph",
    "SupportKind",
    "CircuitSupport",
    "enumerate_cycles",
    "is_balanced",
    "usual_labelling_matrix",
    "connecting_paths",
    "find_circuit_supports",
]


def _sub_incidence(graph: WeightedOrientedGraph, vertices, edges) -> IntMatrix:
    row = {v: i for i, v in enumerate(vertices)}
    rows = [[0] * len(edges) for _ in vertices]
    for j, e in enumerate(edges):
        t, h = graph.endpoints(e)
        rows[row[t]][j] = 1
        rows[row[h]][j] = graph.weight(h)
    return IntMatrix.from_rows(rows, vertices, edges, cols=len(edges))


@dataclass(frozen=True)
class CycleSubgraph:
    graph: WeightedOrientedGraph = field(compare=False, repr=False)
    vertices: tuple[str, ...]
    edges: tuple[str, ...]

    def __post_init__(self):
        m = len(self.vertices)
        if m < 3:
            raise SupportShapeError(f"a cycle needs at least 3 vertices, got {m}")
        if len(self.edges) != m:
            raise SupportShapeError("a cycle has as many edges as vertices")
        if len(set(self.vertices)) != m:
            raise SupportShapeError("repeated vertex on cycle")
        for i, e in enumerate(self.edges):
            u, v = self.vertices[i], self.vertices[(i + 1) % m]
            if self.graph.edge_between(u, v) != e:
                raise SupportShapeError(f"edge {e!r} does not join {u!r} and {v!r}")

    def __len__(self):
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @property
    def edge_set(self) -> frozenset[str]:
        return frozenset(self.edges)

    def rotated(self, start: str, direction: int = 1) -> "CycleSubgraph":
        """Relabel starting at ``start``; ``direction=-1`` reverses the traversal."""
        if start not in self.vertex_set:
            raise ArgumentError(f"vertex {start!r} is not on the cycle")
        if direction not in (1, -1):
            raise ArgumentError("direction must be +1 or -1")
        m = len(self)
        s = self.vertices.index(start)
        if direction == 1:
            vs = tuple(self.vertices[(s + i) % m] for i in range(m))
            es = tuple(self.edges[(s + i) % m] for i in range(m))
        else:
            vs = tuple(self.vertices[(s - i) % m] for i in range(m))
            es = tuple(self.edges[(s - 1 - i) % m] for i in range(m))
        return CycleSubgraph(self.graph, vs, es)

    def labellings(self) -> Iterator["CycleSubgraph"]:
        for v in self.vertices:
            yield self.rotated(v, 1)
            yield self.rotated(v, -1)

    def canonical(self) -> "CycleSubgraph":
        """Start at the earliest-declared vertex; second vertex is the earlier neighbour."""
        pos = self.graph.vertex_index
        first = min(self.vertices, key=pos)
        fwd = self.rotated(first, 1)
        if pos(fwd.vertices[1]) < pos(fwd.vertices[-1]):
            return fwd
        return self.rotated(first, -1)

    def matrix(self) -> IntMatrix:
        return _sub_incidence(self.graph, self.vertices, self.edges)


@dataclass(frozen=True)
class PathSubgraph:
    graph: WeightedOrientedGraph = field(compare=False, repr=False)
    vertices: tuple[str, ...]
    edges: tuple[str, ...]

    def __post_init__(self):
        if not self.vertices:
            raise SupportShapeError("a path has at least one vertex")
        if len(self.edges) != len(self.vertices) - 1:
            raise SupportShapeError("a path of length k has k + 1 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise SupportShapeError("repeated vertex on path")
        for i, e in enumerate(self.edges):
            u, v = self.vertices[i], self.vertices[i + 1]
            if self.graph.edge_between(u, v) != e:
                raise SupportShapeError(f"edge {e!r} does not join {u!r} and {v!r}")

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @property
    def edge_set(self) -> frozenset[str]:
        return frozenset(self.edges)

    @property
    def interior(self) -> frozenset[str]:
        return frozenset(self.vertices[1:-1])

    def reversed(self) -> "PathSubgraph":
        return PathSubgraph(self.graph, self.vertices[::-1], self.edges[::-1])

    def matrix(self) -> IntMatrix:
        return _sub_incidence(self.graph, self.vertices, self.edges)


def usual_labelling_matrix(sub, start_vertex: str | None = None, direction: int = 1) -> IntMatrix:
    """Incidence submatrix of a cycle or path in its usual labelling from ``start_vertex``.

    For a path the start must be one of its endpoints and fixes the direction.
    """
    if isinstance(sub, CycleSubgraph):
        if start_vertex is None:
            return sub.matrix()
        return sub.rotated(start_vertex, direction).matrix()
    if isinstance(sub, PathSubgraph):
        if start_vertex is None or start_vertex == sub.vertices[0]:
            return sub.matrix()
        if start_vertex == sub.vertices[-1]:
            return sub.reversed().matrix()
        if start_vertex in sub.vertex_set:
            raise ArgumentError(f"{start_vertex!r} is an interior vertex of the path")
        raise ArgumentError(f"vertex {start_vertex!r} is not on the path")
    raise TypeError(f"expected CycleSubgraph or PathSubgraph, got {type(sub).__name__}")


def is_balanced(C: CycleSubgraph) -> bool:
    return det(C.matrix()) == 0


class SupportKind(enum.Enum):
    BALANCED_CYCLE = "BalancedCycle"
    SHARED_VERTEX = "SharedVertex"
    PATH_CONNECTED = "PathConnected"
    SHARED_PATH = "SharedPath"


@dataclass(frozen=True)
class CircuitSupport:
    """One of the four subgraph shapes that carry a circuit.

    ``cycles`` holds one cycle (balanced case) or the two unbalanced cycles;
    ``path`` is the connecting or shared path; ``outer`` is the third cycle of a
    theta graph.
    """

    kind: SupportKind
    cycles: tuple[CycleSubgraph, ...]
    path: PathSubgraph | None = None
    outer: CycleSubgraph | None = None

    def __post_init__(self):
        kind, cyc = self.kind, self.cycles
        if kind is SupportKind.BALANCED_CYCLE:
            if len(cyc) != 1 or self.path is not None or self.outer is not None:
                raise SupportShapeError("a balanced-cycle support is a single cycle")
            return
        if len(cyc) != 2:
            raise SupportShapeError(f"{kind.value} support needs two cycles")
        a, b = cyc
        shared_v = a.vertex_set & b.vertex_set
        shared_e = a.edge_set & b.edge_set
        if kind is SupportKind.SHARED_VERTEX:
            if len(shared_v) != 1 or shared_e or self.path is not None:
                raise SupportShapeError("cycles must meet in exactly one vertex")
        elif kind is SupportKind.PATH_CONNECTED:
            p = self.path
            if shared_v or p is None or p.length < 1:
                raise SupportShapeError("vertex-disjoint cycles joined by a path of length >= 1")
            ends = {p.vertices[0], p.vertices[-1]}
            if not (ends & a.vertex_set and ends & b.vertex_set):
                raise SupportShapeError("path endpoints must lie one on each cycle")
            if p.interior & (a.vertex_set | b.vertex_set):
                raise SupportShapeError("path must be internally disjoint from both cycles")
        elif kind is SupportKind.SHARED_PATH:
            p, outer = self.path, self.outer
            if p is None or p.length < 1 or outer is None:
                raise SupportShapeError("shared-path support needs the path and the outer cycle")
            if shared_e != p.edge_set or shared_v != p.vertex_set:
                raise SupportShapeError("cycles must intersect exactly in the path")
            if outer.edge_set != (a.edge_set | b.edge_set) - p.edge_set:
                raise SupportShapeError("outer cycle must be the symmetric difference of the cycles")

    @property
    def edge_set(self) -> frozenset[str]:
        es = frozenset().union(*(c.edge_set for c in self.cycles))
        if self.path is not None:
            es |= self.path.edge_set
        return es

    @property
    def graph(self) -> WeightedOrientedGraph:
        return self.cycles[0].graph

    def describe(self) -> dict:
        out = {"kind": self.kind.value, "cycles": [list(c.vertices) for c in self.cycles]}
        if self.path is not None:
            out["path"] = list(self.path.vertices)
        if self.outer is not None:
            out["outer"] = list(self.outer.vertices)
        return out


def enumerate_cycles(D: WeightedOrientedGraph) -> list[CycleSubgraph]:
    """All simple cycles of the underlying undirected graph, each once, canonical form.

    Backtracking from each start vertex through later-declared vertices only;
    the orientation is fixed by requiring the second vertex to precede the last.
    """
    pos = D.vertex_index
    found: list[tuple[str, ...]] = []
    for s in D.vertex_ids:
        si = pos(s)
        path = [s]
        on_path = {s}

        def extend(u: str) -> None:
            for w, _ in D.adjacency[u]:
                if w == s:
                    if len(path) >= 3 and pos(path[1]) < pos(path[-1]):
                        found.append(tuple(path))
                elif pos(w) > si and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)

    cycles = []
    for vs in found:
        m = len(vs)
        es = tuple(D.edge_between(vs[i], vs[(i + 1) % m]) for i in range(m))
        cycles.append(CycleSubgraph(D, vs, es))
    cycles.sort(key=lambda c: (len(c), [pos(v) for v in c.vertices]))
    return cycles


def connecting_paths(D: WeightedOrientedGraph, a: CycleSubgraph, b: CycleSubgraph) -> list[PathSubgraph]:
    """Every simple path from a vertex of ``a`` to a vertex of ``b`` of length >= 1
    whose interior avoids both cycles.  Paths run from ``a`` to ``b``."""
    blocked = a.vertex_set | b.vertex_set
    targets = b.vertex_set
    out: list[PathSubgraph] = []
    for start in a.vertices:
        vs, es = [start], []

        def extend(u: str) -> None:
            for w, e in D.adjacency[u]:
                if w in targets:
                    out.append(PathSubgraph(D, tuple(vs) + (w,), tuple(es) + (e,)))
                elif w not in blocked and w not in vs:
                    vs.append(w)
                    es.append(e)
                    extend(w)
                    vs.pop()
                    es.pop()

        extend(start)
    pos = D.vertex_index
    out.sort(key=lambda p: (p.length, [pos(v) for v in p.vertices]))
    return out


def _shared_path(D, a: CycleSubgraph, b: CycleSubgraph) -> PathSubgraph | None:
    """The path in which two cycles intersect, or None if the intersection is not a path."""
    shared_v = a.vertex_set & b.vertex_set
    shared_e = a.edge_set & b.edge_set
    if not shared_e or len(shared_e) != len(shared_v) - 1:
        return None
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in shared_v}
    for e in shared_e:
        t, h = D.endpoints(e)
        adj[t].append((h, e))
        adj[h].append((t, e))
    ends = sorted((v for v, nb in adj.items() if len(nb) == 1), key=D.vertex_index)
    if len(ends) != 2 or any(len(nb) > 2 for nb in adj.values()):
        return None
    vs, es = [ends[0]], []
    prev = None
    while len(vs) <= len(shared_e):
        nxt = [(w, e) for w, e in adj[vs[-1]] if w != prev]
        if not nxt:
            return None
        w, e = nxt[0]
        prev = vs[-1]
        vs.append(w)
        es.append(e)
    if set(vs) != shared_v:
        return None
    return PathSubgraph(D, tuple(vs), tuple(es))


def find_circuit_supports(
    D: WeightedOrientedGraph, diagnostics: list[str] | None = None
) -> list[CircuitSupport]:
    """All circuit-carrying subgraphs, in a deterministic order.

    Balanced cycles first (cycle order), then pairs of unbalanced cycles in
    cycle order.  Pairs whose intersection is neither empty, a single vertex,
    nor a single path are skipped and reported through ``diagnostics``.
    """
    cycles = enumerate_cycles(D)
    balanced = {c: is_balanced(c) for c in cycles}
    by_edges = {c.edge_set: c for c in cycles}
    supports = [CircuitSupport(SupportKind.BALANCED_CYCLE, (c,)) for c in cycles if balanced[c]]
    unbalanced = [c for c in cycles if not balanced[c]]
    for i, a in enumerate(unbalanced):
        for b in unbalanced[i + 1 :]:
            shared_v = a.vertex_set & b.vertex_set
            if not shared_v:
                for p in connecting_paths(D, a, b):
                    supports.append(CircuitSupport(SupportKind.PATH_CONNECTED, (a, b), path=p))
            elif len(shared_v) == 1:
                supports.append(CircuitSupport(SupportKind.SHARED_VERTEX, (a, b)))
            else:
                p = _shared_path(D, a, b)
                if p is None:
                    msg = (
                        f"cycles {list(a.vertices)} and {list(b.vertices)} meet in "
                        f"{len(shared_v)} vertices that do not form a single path; skipped"
                    )
                    log.debug(msg)
                    if diagnostics is not None:
                        diagnostics.append(msg)
                    continue
                outer = by_edges[(a.edge_set | b.edge_set) - p.edge_set]
                if balanced[outer]:
                    continue
                supports.append(CircuitSupport(SupportKind.SHARED_PATH, (a, b), path=p, outer=outer))
    return supports
