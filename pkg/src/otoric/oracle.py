"""Brute-force ground truth for circuits, primitivity and small Graver sets.

Nothing here looks at cycles or minors formulas: circuits are minimal
dependent column sets of a matrix, primitivity and Graver elements come from
exhaustive search over integer boxes.  Every search is bounded by an
:class:`OracleBudget` and raises :class:`BudgetExceeded` instead of
returning a partial answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ArgumentError, BudgetExceeded
from .graph import WeightedOrientedGraph, incidence_matrix
from .linalg import IntMatrix, kernel_contains, rank, rational_kernel_basis

__all__ = [
    "OracleBudget",
    "is_circuit_support",
    "circuits_brute_force",
    "is_primitive",
    "graver_small",
    "kernel_points",
    "verify_restriction",
]


@dataclass(frozen=True)
class OracleBudget:
    max_entry_bound: int = 64
    max_support_size: int = 12
    max_enumeration_count: int = 10**7

    def __post_init__(self):
        for name in ("max_entry_bound", "max_support_size", "max_enumeration_count"):
            if getattr(self, name) < 1:
                raise ArgumentError(f"{name} must be positive")


DEFAULT_BUDGET = OracleBudget()


def _columns(A: IntMatrix, cols: Sequence[int]) -> IntMatrix:
    """Columns ``cols`` restricted to the rows where they are not all zero."""
    rows = [i for i in range(A.rows) if any(A[i, j] for j in cols)]
    return A.submatrix(rows, cols)


def is_circuit_support(A: IntMatrix, S: Iterable[int]) -> bool:
    """True iff the columns in S are dependent and every proper subset is independent."""
    cols = sorted(set(S))
    if not cols:
        raise ArgumentError("support must be nonempty")
    size = len(cols)
    if rank(_columns(A, cols)) != size - 1:
        return False
    return all(rank(_columns(A, cols[:i] + cols[i + 1 :])) == size - 1 for i in range(size))


def _canonical(v: Sequence[int]) -> tuple[int, ...]:
    lead = next((x for x in v if x), 0)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


def circuits_brute_force(A: IntMatrix, budget: OracleBudget = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Primitive integer vectors on every minimally dependent column set.

    Subsets are visited by increasing size; a subset containing an already
    found circuit is skipped, so any dependent subset reached is minimal.
    """
    n = A.cols
    limit = min(budget.max_support_size, rank(A) + 1, n)
    found_masks: list[int] = []
    out: list[tuple[int, ...]] = []
    count = 0
    for size in range(1, limit + 1):
        for cols in combinations(range(n), size):
            count += 1
            if count > budget.max_enumeration_count:
                raise BudgetExceeded(
                    f"circuit enumeration exceeded {budget.max_enumeration_count} subsets"
                )
            mask = 0
            for j in cols:
                mask |= 1 << j
            if any(f & mask == f for f in found_masks):
                continue
            sub = _columns(A, cols)
            if rank(sub) == size:
                continue
            (basis,) = rational_kernel_basis(sub)
            v = [0] * n
            for j, x in zip(cols, basis.primitive()):
                v[j] = x
            found_masks.append(mask)
            out.append(_canonical(v))
    return sorted(out)


def kernel_points(
    A: IntMatrix,
    ranges: Sequence[tuple[int, int]],
    budget: OracleBudget = DEFAULT_BUDGET,
) -> Iterator[tuple[int, ...]]:
    """All integer x with A x = 0 and lo_j <= x_j <= hi_j, by depth-first search.

    Columns are visited so that rows close as early as possible.  When a
    column is the last open one in some row its value is forced; rows still
    open are pruned with the interval of values their remaining columns can
    reach.  Every search node counts against ``budget.max_enumeration_count``.
    """
    n = A.cols
    if len(ranges) != n:
        raise ArgumentError("one range per column required")
    free = [j for j in range(n) if ranges[j] != (0, 0)]
    rows = [i for i in range(A.rows) if any(A[i, j] for j in free)]

    # greedy order: next column touches the most rows already touched
    order: list[int] = []
    touched: set[int] = set()
    remaining = list(free)
    while remaining:
        best = max(remaining, key=lambda j: (sum(1 for i in rows if A[i, j] and i in touched), -j))
        order.append(best)
        remaining.remove(best)
        touched.update(i for i in rows if A[i, best])

    steps = len(order)
    last_step = {i: max(s for s, j in enumerate(order) if A[i, j]) for i in rows}
    closing = [[i for i in rows if last_step[i] == s] for s in range(steps)]
    # reachable interval of each row's contribution from steps >= s
    lo_rest = {i: [0] * (steps + 1) for i in rows}
    hi_rest = {i: [0] * (steps + 1) for i in rows}
    for i in rows:
        for s in range(steps - 1, -1, -1):
            a = A[i, order[s]]
            lo_j, hi_j = ranges[order[s]]
            lo_rest[i][s] = lo_rest[i][s + 1] + min(a * lo_j, a * hi_j)
            hi_rest[i][s] = hi_rest[i][s + 1] + max(a * lo_j, a * hi_j)

    x = [0] * n
    partial = {i: 0 for i in rows}
    counter = [0]

    def search(s: int) -> Iterator[tuple[int, ...]]:
        if s == steps:
            yield tuple(x)
            return
        j = order[s]
        lo_j, hi_j = ranges[j]
        forced = next((i for i in closing[s] if A[i, j]), None)
        if forced is not None:
            num = -partial[forced]
            a = A[forced, j]
            if num % a:
                return
            candidates: Iterable[int] = (num // a,) if lo_j <= num // a <= hi_j else ()
        else:
            candidates = range(lo_j, hi_j + 1)
        col = [(i, A[i, j]) for i in rows if A[i, j]]
        for val in candidates:
            counter[0] += 1
            if counter[0] > budget.max_enumeration_count:
                raise BudgetExceeded(f"box search exceeded {budget.max_enumeration_count} nodes")
            for i, a in col:
                partial[i] += a * val
            ok = all(partial[i] == 0 for i in closing[s]) and all(
                partial[i] + lo_rest[i][s + 1] <= 0 <= partial[i] + hi_rest[i][s + 1]
                for i, _ in col
            )
            if ok:
                x[j] = val
                yield from search(s + 1)
                x[j] = 0
            for i, a in col:
                partial[i] -= a * val

    # rows with no free column are identically zero, nothing to check
    yield from search(0)


def is_primitive(A: IntMatrix, v: Sequence[int], budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """True iff no kernel vector other than 0 and v lies in v's conformal box."""
    v = tuple(v)
    if len(v) != A.cols or not any(v) or not kernel_contains(A, v):
        raise ArgumentError("v must be a nonzero kernel vector of A")
    ranges = [(0, x) if x >= 0 else (x, 0) for x in v]
    zero = (0,) * len(v)
    for x in kernel_points(A, ranges, budget):
        if x != zero and x != v:
            return False
    return True


def _dominates(y: Sequence[int], x: Sequence[int]) -> bool:
    """y is conformal to x and no larger in any coordinate."""
    return all(a * b >= 0 and abs(a) <= abs(b) for a, b in zip(y, x))


def graver_small(A: IntMatrix, budget: OracleBudget = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Primitive kernel vectors with all |entries| <= budget.max_entry_bound.

    This is the Graver basis truncated to a box, not the full Graver basis.
    Any vector dominating a boxed vector is itself in the box, so filtering
    within the box is exact.
    """
    b = budget.max_entry_bound
    points = {_canonical(x) for x in kernel_points(A, [(-b, b)] * A.cols, budget) if any(x)}
    primitive: list[tuple[int, ...]] = []
    for x in sorted(points, key=lambda p: (sum(map(abs, p)), p)):
        neg = tuple(-t for t in x)
        if not any(_dominates(y, x) or _dominates(y, neg) for y in primitive):
            primitive.append(x)
    return sorted(primitive)


def verify_restriction(
    D: WeightedOrientedGraph, edge_subset: Iterable[str], budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """Circuits of the spanning subgraph on ``edge_subset`` equal D's circuits supported there."""
    keep = set(edge_subset)
    H = D.edge_subgraph(keep)
    ids_h = H.edge_ids
    ids_d = D.edge_ids
    lhs = set(circuits_brute_force(incidence_matrix(H), budget))
    rhs = set()
    for v in circuits_brute_force(incidence_matrix(D), budget):
        if all(x == 0 or e in keep for e, x in zip(ids_d, v)):
            vals = dict(zip(ids_d, v))
            rhs.add(_canonical([vals[e] for e in ids_h]))
    return lhs == rhs
