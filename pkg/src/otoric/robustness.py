"""Membership in the strongly robust class, generator counts and Betti numbers.

A graph is in the class when it has at most two unbalanced cycles, no
balanced cycle shares an edge with a path joining two vertex-disjoint
unbalanced cycles, and no two balanced cycles share an edge.  For such graphs
the circuits are exactly the Graver basis and form a minimal generating set,
so the ideal is a complete intersection with Betti numbers C(mu, i).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .circuits import Circuit, circuits
from .cycles import connecting_paths, enumerate_cycles, is_balanced
from .errors import ArgumentError, OutOfClassError
from .graph import WeightedOrientedGraph

log = logging.getLogger(__name__)

__all__ = ["RobustnessReport", "check_robust_class", "betti_table", "mu_of"]


@dataclass
class RobustnessReport:
    in_class: bool
    violated_condition: str | None
    balanced_cycle_count: int
    unbalanced_cycle_count: int
    mu: int | None = None
    betti: list[int] | None = None
    case_table_mu: int | None = None
    circuit_list: list[Circuit] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def zero_ideal(self) -> bool:
        return self.mu == 0

    @property
    def projective_dimension(self) -> int | None:
        return self.mu


def betti_table(mu: int) -> list[int]:
    if mu < 0:
        raise ArgumentError("mu must be non-negative")
    return [comb(mu, i) for i in range(mu + 1)]


def check_robust_class(D: WeightedOrientedGraph) -> RobustnessReport:
    cycles = enumerate_cycles(D)
    balanced = [c for c in cycles if is_balanced(c)]
    unbalanced = [c for c in cycles if not is_balanced(c)]
    report = RobustnessReport(False, None, len(balanced), len(unbalanced))

    if len(unbalanced) > 2:
        report.violated_condition = "more than two unbalanced cycles"
        return report
    paths = []
    if len(unbalanced) == 2:
        a, b = unbalanced
        if not a.vertex_set & b.vertex_set:
            paths = connecting_paths(D, a, b)
        for p in paths:
            for c in balanced:
                if c.edge_set & p.edge_set:
                    report.violated_condition = (
                        f"balanced cycle {list(c.vertices)} shares an edge with the path "
                        f"{list(p.vertices)} joining the two unbalanced cycles"
                    )
                    return report
    for c1, c2 in combinations(balanced, 2):
        if c1.edge_set & c2.edge_set:
            report.violated_condition = (
                f"balanced cycles {list(c1.vertices)} and {list(c2.vertices)} share a path"
            )
            return report

    report.in_class = True
    report.circuit_list = circuits(D)
    report.mu = len(report.circuit_list)
    report.betti = betti_table(report.mu)

    extra = 0
    if len(unbalanced) == 2:
        a, b = unbalanced
        if len(a.vertex_set & b.vertex_set) == 1 or paths:
            extra = 1
    report.case_table_mu = len(balanced) + extra
    if report.case_table_mu != report.mu:
        msg = f"case table gives mu = {report.case_table_mu}, circuit list gives {report.mu}"
        log.warning(msg)
        report.warnings.append(msg)

    for c1, c2 in combinations(report.circuit_list, 2):
        common = c1.vector.support_edges & c2.vector.support_edges
        if common:
            report.warnings.append(
                f"circuits {c1.render()!r} and {c2.render()!r} share edges {sorted(common)}"
            )
    return report


def mu_of(D: WeightedOrientedGraph) -> int:
    report = check_robust_class(D)
    if not report.in_class:
        raise OutOfClassError(report.violated_condition)
    return report.mu
