"""Invariant suite run by ``otoric verify``.

Each check returns an :class:`InvariantResult`; the suite never stops at the
first failure so a report always lists every invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence

from .circuits import Circuit, canonical_sign, circuits
from .errors import BudgetExceeded
from .graph import WeightedOrientedGraph, incidence_matrix, normalize_sink_weights, structural_queries
from .linalg import kernel_contains
from .oracle import DEFAULT_BUDGET, OracleBudget, circuits_brute_force, is_primitive

__all__ = ["InvariantResult", "run_invariants"]


@dataclass
class InvariantResult:
    name: str
    passed: bool
    detail: str = ""
    budget_exceeded: bool = False


def _fmt(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def run_invariants(
    D: WeightedOrientedGraph,
    circuit_list: list[Circuit] | None = None,
    budget: OracleBudget = DEFAULT_BUDGET,
    expected: Sequence[Sequence[int]] | None = None,
) -> list[InvariantResult]:
    if circuit_list is None:
        circuit_list = circuits(D)
    A = incidence_matrix(D)
    vectors = [c.exponents for c in circuit_list]
    results = []

    bad = [v for v in vectors if not kernel_contains(A, v)]
    results.append(InvariantResult("kernel-membership", not bad, "; ".join(map(_fmt, bad))))

    bad = [v for v in vectors if reduce(gcd, v, 0) != 1]
    results.append(InvariantResult("gcd-normalized", not bad, "; ".join(map(_fmt, bad))))

    bad = [c.exponents for c in circuit_list if c.vector.support_edges != c.support.edge_set]
    results.append(InvariantResult("support-exactness", not bad, "; ".join(map(_fmt, bad))))

    info = structural_queries(D)
    leaf_edges = {e for e, t, h in D.edges if t in info.leaves or h in info.leaves}
    bad = [c.exponents for c in circuit_list if c.vector.support_edges & leaf_edges]
    results.append(InvariantResult("leaf-exclusion", not bad, "; ".join(map(_fmt, bad))))

    bad = []
    for v in vectors:
        for u in D.vertex_ids:
            signs = {(x > 0) for (e, t, h), x in zip(D.edges, v) if x and u in (t, h)}
            if len(signs) == 1:
                bad.append(f"{_fmt(v)} at {u}")
    results.append(InvariantResult("sign-alternation", not bad, "; ".join(bad)))

    try:
        # vectors outside the kernel are already reported above
        bad = [v for v in vectors if any(v) and kernel_contains(A, v) and not is_primitive(A, v, budget)]
        results.append(InvariantResult("primitivity", not bad, "; ".join(map(_fmt, bad))))
    except BudgetExceeded as exc:
        results.append(InvariantResult("primitivity", False, str(exc), budget_exceeded=True))

    try:
        oracle = set(circuits_brute_force(A, budget))
        mine = {canonical_sign(v) for v in vectors}
        detail = ""
        if mine != oracle:
            detail = (
                f"formula only: {sorted(mine - oracle)}; oracle only: {sorted(oracle - mine)}"
            )
        results.append(InvariantResult("oracle-equivalence", mine == oracle, detail))
    except BudgetExceeded as exc:
        results.append(InvariantResult("oracle-equivalence", False, str(exc), budget_exceeded=True))

    normalized = [c.exponents for c in circuits(normalize_sink_weights(D))]
    same = sorted(normalized) == sorted(vectors)
    results.append(InvariantResult("sink-independence", same, "" if same else f"{normalized}"))

    if expected is not None:
        want = {canonical_sign(tuple(v)) for v in expected}
        got = {canonical_sign(v) for v in vectors}
        results.append(
            InvariantResult(
                "expected-circuits",
                want == got,
                "" if want == got else f"missing {sorted(want - got)}; unexpected {sorted(got - want)}",
            )
        )
    return results
