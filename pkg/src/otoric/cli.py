"""``otoric`` command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 oracle
budget exceeded, 4 graph outside the strongly robust class.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
from dataclasses import dataclass, field

from .circuits import circuits
from .cycles import enumerate_cycles, find_circuit_supports
from .errors import OtoricError, ParseError, ValidationError
from .fixtures import FIXTURES, get_fixture
from .graph import (
    WeightedOrientedGraph,
    graph_to_dict,
    incidence_matrix,
    parse_graph,
    serialize_graph,
    structural_queries,
)
from .linalg import det
from .oracle import OracleBudget, circuits_brute_force, graver_small
from .robustness import check_robust_class
from .verify import run_invariants

log = logging.getLogger("otoric")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET, EXIT_OUT_OF_CLASS = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    command: str
    input_digest: str
    results: dict
    timing: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "input_digest": self.input_digest,
            "results": self.results,
            "timing": {k: round(v, 6) for k, v in self.timing.items()},
            "warnings": self.warnings,
        }
        return json.dumps(doc, indent=2)


def _ints(v) -> list[str]:
    """Big integers travel as decimal strings."""
    return [str(x) for x in v]


class _Timer:
    def __init__(self, timing: dict, phase: str):
        self.timing, self.phase = timing, phase

    def __enter__(self):
        self.t0 = time.perf_counter()

    def __exit__(self, *exc):
        self.timing[self.phase] = self.timing.get(self.phase, 0.0) + time.perf_counter() - self.t0


def _load(args) -> tuple[WeightedOrientedGraph, str]:
    if args.fixtures:
        D = get_fixture(args.fixtures)
        text = serialize_graph(D)
    else:
        if args.graph is None:
            raise ParseError("no graph file given (or use --fixtures NAME)")
        try:
            with open(args.graph, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"{args.graph}: {exc.strerror}") from exc
        D = parse_graph(text)
    return D, hashlib.sha256(text.encode("utf-8")).hexdigest()


def _budget(args) -> OracleBudget:
    return OracleBudget(
        max_entry_bound=args.bound or OracleBudget.max_entry_bound,
        max_support_size=args.max_support,
        max_enumeration_count=args.max_count,
    )


# -- commands ------------------------------------------------------------


def cmd_analyze(D, args, report: RunReport) -> int:
    with _Timer(report.timing, "analyze"):
        A = incidence_matrix(D)
        info = structural_queries(D)
        cycles = []
        for c in enumerate_cycles(D):
            d = det(c.matrix())
            cycles.append({"vertices": list(c.vertices), "edges": list(c.edges),
                           "det": str(d), "balanced": d == 0})
    report.results = {
        **graph_to_dict(D),
        "incidence_matrix": {
            "rows": list(A.row_labels),
            "cols": list(A.col_labels),
            "entries": [_ints(A.row(i)) for i in range(A.rows)],
        },
        "cycles": cycles,
        "sinks": [v for v in D.vertex_ids if v in info.sinks],
        "leaves": [v for v in D.vertex_ids if v in info.leaves],
    }
    return EXIT_OK


def _text_analyze(report: RunReport) -> str:
    r = report.results
    m = r["incidence_matrix"]
    lines = [f"graph: {len(r['vertices'])} vertices, {len(r['edges'])} edges", "incidence matrix:"]
    width = max([len(x) for row in m["entries"] for x in row] + [len(c) for c in m["cols"]] + [1])
    label_w = max([len(x) for x in m["rows"]] + [1])
    lines.append(" " * (label_w + 2) + " ".join(c.rjust(width) for c in m["cols"]))
    for lbl, row in zip(m["rows"], m["entries"]):
        lines.append(f"  {lbl.ljust(label_w)}" + "".join(" " + x.rjust(width) for x in row))
    lines.append(f"cycles: {len(r['cycles'])}")
    for c in r["cycles"]:
        status = "balanced" if c["balanced"] else "unbalanced"
        lines.append(f"  [{' '.join(c['vertices'])}] det={c['det']} {status}")
    lines.append("sinks: " + (" ".join(r["sinks"]) or "-"))
    lines.append("leaves: " + (" ".join(r["leaves"]) or "-"))
    return "\n".join(lines)


def _circuit_json(c) -> dict:
    out = {
        "kind": c.kind.value,
        "vector": _ints(c.exponents),
        "binomial": c.render(),
        "supports": [s.describe() for s in c.supports],
    }
    if "d" in c.vector.trace:
        out["d"] = str(c.vector.trace["d"])
    for k in ("p", "q", "s"):
        if k in c.vector.trace:
            out[k] = str(c.vector.trace[k])
    return out


def cmd_circuits(D, args, report: RunReport) -> int:
    diagnostics: list[str] = []
    with _Timer(report.timing, "circuits"):
        found = circuits(D, jobs=args.jobs, diagnostics=diagnostics)
    report.warnings.extend(diagnostics)
    report.results = {"edges": list(D.edge_ids), "circuits": [_circuit_json(c) for c in found]}
    return EXIT_OK


def _text_circuits(report: RunReport) -> str:
    return "\n".join(c["binomial"] for c in report.results["circuits"])


def cmd_verify(D, args, report: RunReport) -> int:
    expected = None
    if args.expect:
        try:
            with open(args.expect, encoding="utf-8") as fh:
                doc = json.load(fh)
            expected = [[int(x) for x in v] for v in doc["circuits"]]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"{args.expect}: cannot read expected circuits ({exc})") from exc
    with _Timer(report.timing, "circuits"):
        found = circuits(D, jobs=args.jobs)
    with _Timer(report.timing, "invariants"):
        results = run_invariants(D, found, _budget(args), expected)
    report.results = {
        "invariants": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
        "circuit_count": len(found),
    }
    if any(r.budget_exceeded for r in results):
        return EXIT_BUDGET
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _text_verify(report: RunReport) -> str:
    lines = []
    for r in report.results["invariants"]:
        line = f"{'PASS' if r['passed'] else 'FAIL'} {r['name']}"
        if r["detail"]:
            line += f": {r['detail']}"
        lines.append(line)
    return "\n".join(lines)


def cmd_betti(D, args, report: RunReport) -> int:
    with _Timer(report.timing, "robustness"):
        rob = check_robust_class(D)
    report.warnings.extend(rob.warnings)
    report.results = {
        "in_class": rob.in_class,
        "violated_condition": rob.violated_condition,
        "balanced_cycle_count": rob.balanced_cycle_count,
        "unbalanced_cycle_count": rob.unbalanced_cycle_count,
        "mu": rob.mu,
        "betti": None if rob.betti is None else _ints(rob.betti),
        "projective_dimension": rob.projective_dimension,
        "zero_ideal": rob.zero_ideal if rob.in_class else None,
        "circuits": [c.render() for c in rob.circuit_list],
    }
    if not rob.in_class:
        print(f"otoric: out of class: {rob.violated_condition}", file=sys.stderr)
        return EXIT_OUT_OF_CLASS
    return EXIT_OK


def _text_betti(report: RunReport) -> str:
    r = report.results
    lines = [
        f"in class: {'yes' if r['in_class'] else 'no'}",
        f"balanced cycles: {r['balanced_cycle_count']}",
        f"unbalanced cycles: {r['unbalanced_cycle_count']}",
    ]
    if r["in_class"]:
        lines += [
            f"mu: {r['mu']}",
            f"betti: {' '.join(r['betti'])}",
            f"projective dimension: {r['projective_dimension']}",
        ]
        if r["zero_ideal"]:
            lines.append("zero ideal")
        lines += [f"  {b}" for b in r["circuits"]]
    else:
        lines.append(f"violated: {r['violated_condition']}")
    return "\n".join(lines)


def cmd_oracle_compare(D, args, report: RunReport) -> int:
    A = incidence_matrix(D)
    with _Timer(report.timing, "formula"):
        formula = {c.exponents for c in circuits(D, jobs=args.jobs)}
    bound = args.bound or max((abs(x) for v in formula for x in v), default=1)
    budget = OracleBudget(bound, args.max_support, args.max_count)
    with _Timer(report.timing, "brute_force"):
        brute = set(circuits_brute_force(A, budget))
    with _Timer(report.timing, "graver"):
        graver = set(graver_small(A, budget))

    def rows(vs):
        return [_ints(v) for v in sorted(vs)]

    report.results = {
        "bound": bound,
        "formula": rows(formula),
        "brute_force": rows(brute),
        "graver": rows(graver),
        "formula_minus_brute_force": rows(formula - brute),
        "brute_force_minus_formula": rows(brute - formula),
        "graver_minus_circuits": rows(graver - brute),
        "circuits_minus_graver": rows(brute - graver),
    }
    return EXIT_OK if formula == brute else EXIT_FAIL


def _text_oracle_compare(report: RunReport) -> str:
    r = report.results
    lines = [f"bound: {r['bound']}"]
    for key in ("formula", "brute_force", "graver"):
        lines.append(f"{key}: {len(r[key])}")
        lines += ["  (" + ",".join(v) + ")" for v in r[key]]
    for key in ("formula_minus_brute_force", "brute_force_minus_formula",
                "graver_minus_circuits", "circuits_minus_graver"):
        vals = " ".join("(" + ",".join(v) + ")" for v in r[key])
        lines.append(f"{key}: {vals or '-'}")
    return "\n".join(lines)


COMMANDS = {
    "analyze": (cmd_analyze, _text_analyze),
    "circuits": (cmd_circuits, _text_circuits),
    "verify": (cmd_verify, _text_verify),
    "betti": (cmd_betti, _text_betti),
    "oracle-compare": (cmd_oracle_compare, _text_oracle_compare),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="otoric",
        description="Circuit binomials of toric ideals of weighted oriented graphs.",
    )
    parser.add_argument("command", choices=list(COMMANDS))
    parser.add_argument("graph", nargs="?", help="graph JSON document")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--fixtures", choices=sorted(FIXTURES), metavar="NAME",
                        help="use a built-in graph instead of a file: " + ", ".join(sorted(FIXTURES)))
    parser.add_argument("--bound", type=int, default=None,
                        help="largest |entry| searched by the oracle")
    parser.add_argument("--max-support", type=int, default=OracleBudget.max_support_size)
    parser.add_argument("--max-count", type=int, default=OracleBudget.max_enumeration_count)
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for generators")
    parser.add_argument("--expect", help="JSON file {\"circuits\": [[...], ...]} checked by verify")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    run, render = COMMANDS[args.command]
    try:
        timing: dict = {}
        with _Timer(timing, "load"):
            D, digest = _load(args)
        report = RunReport(args.command, digest, {}, timing)
        code = run(D, args, report)
    except (ParseError, ValidationError) as exc:
        print(f"otoric: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OtoricError as exc:
        print(f"otoric: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        print(report.to_json())
    else:
        text = render(report)
        if text:
            print(text)
        for w in report.warnings:
            print(f"otoric: warning: {w}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
