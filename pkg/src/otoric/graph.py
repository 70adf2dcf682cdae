"""Vertex-weighted oriented graphs and their incidence matrices.

Graph documents are JSON::

    {"vertices": [{"id": "v1", "weight": 4}, ...],
     "edges":    [{"id": "e1", "tail": "v2", "head": "v1"}, ...]}

Declaration order matters: it fixes the row order (vertices) and the column
order (edges) of the incidence matrix, and therefore the printed form of
every exponent vector.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import ParseError, ValidationError
from .linalg import IntMatrix

__all__ = [
    "WeightedOrientedGraph",
    "StructuralInfo",
    "parse_graph",
    "load_graph",
    "serialize_graph",
    "graph_to_dict",
    "graph_from_dict",
    "incidence_matrix",
    "normalize_sink_weights",
    "structural_queries",
]


@dataclass(frozen=True)
class WeightedOrientedGraph:
    """Simple graph with an orientation on every edge and a weight on every vertex.

    ``vertices`` holds ``(id, weight)`` pairs and ``edges`` holds
    ``(id, tail, head)`` triples, both in declaration order.
    """

    vertices: tuple[tuple[str, int], ...] = ()
    edges: tuple[tuple[str, str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple((str(v), w) for v, w in self.vertices))
        object.__setattr__(self, "edges", tuple((str(e), str(t), str(h)) for e, t, h in self.edges))
        seen = set()
        for v, w in self.vertices:
            if v in seen:
                raise ValidationError(f"duplicate vertex id {v!r}")
            seen.add(v)
            if not isinstance(w, int) or isinstance(w, bool):
                raise ValidationError(f"vertex {v!r}: weight must be an integer, got {w!r}")
            if w < 1:
                raise ValidationError(f"vertex {v!r}: weight {w} < 1")
        edge_ids = set()
        pairs = {}
        for e, t, h in self.edges:
            if e in edge_ids:
                raise ValidationError(f"duplicate edge id {e!r}")
            edge_ids.add(e)
            for end in (t, h):
                if end not in seen:
                    raise ValidationError(f"edge {e!r}: endpoint {end!r} is not a declared vertex")
            if t == h:
                raise ValidationError(f"edge {e!r}: loop at vertex {t!r}")
            key = frozenset((t, h))
            if key in pairs:
                raise ValidationError(
                    f"edge {e!r}: parallel to edge {pairs[key]!r} between {t!r} and {h!r}"
                )
            pairs[key] = e

    # -- lookups -----------------------------------------------------------

    @cached_property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.vertices)

    @cached_property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e for e, _, _ in self.edges)

    @cached_property
    def weights(self) -> dict[str, int]:
        return dict(self.vertices)

    @cached_property
    def _vertex_pos(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertex_ids)}

    @cached_property
    def _edge_pos(self) -> dict[str, int]:
        return {e: j for j, e in enumerate(self.edge_ids)}

    @cached_property
    def _edge_map(self) -> dict[str, tuple[str, str]]:
        return {e: (t, h) for e, t, h in self.edges}

    @cached_property
    def _pair_edge(self) -> dict[frozenset, str]:
        return {frozenset((t, h)): e for e, t, h in self.edges}

    def weight(self, v: str) -> int:
        return self.weights[v]

    def vertex_index(self, v: str) -> int:
        return self._vertex_pos[v]

    def edge_index(self, e: str) -> int:
        return self._edge_pos[e]

    def endpoints(self, e: str) -> tuple[str, str]:
        """(tail, head) of edge ``e``."""
        return self._edge_map[e]

    def edge_between(self, u: str, v: str) -> str | None:
        return self._pair_edge.get(frozenset((u, v)))

    @cached_property
    def adjacency(self) -> dict[str, list[tuple[str, str]]]:
        """Underlying undirected adjacency: vertex -> [(neighbour, edge id)] in edge order."""
        adj: dict[str, list[tuple[str, str]]] = {v: [] for v in self.vertex_ids}
        for e, t, h in self.edges:
            adj[t].append((h, e))
            adj[h].append((t, e))
        return adj

    def degree(self, v: str) -> int:
        return len(self.adjacency[v])

    def outdegree(self, v: str) -> int:
        return sum(1 for _, t, _ in self.edges if t == v)

    # -- derived graphs ----------------------------------------------------

    def with_weights(self, new_weights: Mapping[str, int]) -> "WeightedOrientedGraph":
        return WeightedOrientedGraph(
            tuple((v, new_weights.get(v, w)) for v, w in self.vertices), self.edges
        )

    def edge_subgraph(self, edge_ids: Iterable[str]) -> "WeightedOrientedGraph":
        """Spanning subgraph (same vertices) keeping only the given edges, in parent order."""
        keep = set(edge_ids)
        unknown = keep - set(self.edge_ids)
        if unknown:
            raise ValidationError(f"unknown edge ids {sorted(unknown)}")
        return WeightedOrientedGraph(self.vertices, tuple(x for x in self.edges if x[0] in keep))


@dataclass(frozen=True)
class StructuralInfo:
    leaves: frozenset[str]
    sinks: frozenset[str]
    degrees: dict[str, int]
    adjacency: dict[str, tuple[str, ...]]


# -- serialization ---------------------------------------------------------

_TOP_KEYS = {"vertices", "edges"}
_VERTEX_KEYS = {"id", "weight"}
_EDGE_KEYS = {"id", "tail", "head"}


def graph_from_dict(doc) -> WeightedOrientedGraph:
    if not isinstance(doc, dict):
        raise ParseError("top level: expected a JSON object")
    extra = set(doc) - _TOP_KEYS
    if extra:
        raise ParseError(f"top level: unknown field(s) {sorted(extra)}")
    missing = _TOP_KEYS - set(doc)
    if missing:
        raise ParseError(f"top level: missing field(s) {sorted(missing)}")
    vertices = doc["vertices"]
    edges = doc["edges"]
    if not isinstance(vertices, list):
        raise ParseError("vertices: expected a list")
    if not isinstance(edges, list):
        raise ParseError("edges: expected a list")

    vs = []
    for i, item in enumerate(vertices):
        where = f"vertices[{i}]"
        _check_keys(item, _VERTEX_KEYS, where)
        if not isinstance(item["id"], str):
            raise ParseError(f"{where}.id: expected a string")
        w = item["weight"]
        if not isinstance(w, int) or isinstance(w, bool):
            raise ParseError(f"{where}.weight: expected an integer, got {w!r}")
        vs.append((item["id"], w))
    es = []
    for i, item in enumerate(edges):
        where = f"edges[{i}]"
        _check_keys(item, _EDGE_KEYS, where)
        for k in ("id", "tail", "head"):
            if not isinstance(item[k], str):
                raise ParseError(f"{where}.{k}: expected a string")
        es.append((item["id"], item["tail"], item["head"]))
    return WeightedOrientedGraph(tuple(vs), tuple(es))


def _check_keys(item, keys, where):
    if not isinstance(item, dict):
        raise ParseError(f"{where}: expected an object")
    extra = set(item) - keys
    if extra:
        raise ParseError(f"{where}: unknown field(s) {sorted(extra)}")
    missing = keys - set(item)
    if missing:
        raise ParseError(f"{where}: missing field(s) {sorted(missing)}")


def parse_graph(text: str) -> WeightedOrientedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return graph_from_dict(doc)


def load_graph(path) -> WeightedOrientedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def graph_to_dict(D: WeightedOrientedGraph) -> dict:
    return {
        "vertices": [{"id": v, "weight": w} for v, w in D.vertices],
        "edges": [{"id": e, "tail": t, "head": h} for e, t, h in D.edges],
    }


def serialize_graph(D: WeightedOrientedGraph) -> str:
    return json.dumps(graph_to_dict(D), indent=2) + "\n"


# -- matrices and queries --------------------------------------------------


def incidence_matrix(D: WeightedOrientedGraph) -> IntMatrix:
    """Vertex x edge matrix: 1 at each edge's tail, the head's weight at its head."""
    n, m = len(D.vertices), len(D.edges)
    entries = [0] * (n * m)
    for j, (_, t, h) in enumerate(D.edges):
        entries[D.vertex_index(t) * m + j] = 1
        entries[D.vertex_index(h) * m + j] = D.weight(h)
    return IntMatrix(n, m, tuple(entries), D.vertex_ids, D.edge_ids)


def normalize_sink_weights(D: WeightedOrientedGraph) -> WeightedOrientedGraph:
    """Copy of D in which every vertex of outdegree 0 has weight 1."""
    tails = {t for _, t, _ in D.edges}
    return D.with_weights({v: 1 for v in D.vertex_ids if v not in tails})


def structural_queries(D: WeightedOrientedGraph) -> StructuralInfo:
    tails = {t for _, t, _ in D.edges}
    degrees = {v: D.degree(v) for v in D.vertex_ids}
    return StructuralInfo(
        leaves=frozenset(v for v, d in degrees.items() if d == 1),
        sinks=frozenset(v for v in D.vertex_ids if v not in tails),
        degrees=degrees,
        adjacency={v: tuple(u for u, _ in D.adjacency[v]) for v in D.vertex_ids},
    )
