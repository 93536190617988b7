"""Command-line front end.

Exit status: 0 when every check passes, 1 when at least one fails, 2 for
usage errors. Findings never change the exit status.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import catalog
from .irreps import WeightCapExceeded, weight_system
from .realize import FAMILIES, RealizationError, UnsupportedFamily, build_realization, check_realization
from .reports import FAIL, VerifyReport
from .rootsys import DiagramError, DynkinDiagram
from .suites import SUITES, run_suite
from .surgery import IrreducibilityError, grade_census, surgery, to_json_dict
from .triples import InadmissibleNode, admissible_nodes

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _diagram(text: str) -> DynkinDiagram:
    try:
        return DynkinDiagram.parse(text)
    except DiagramError as exc:
        raise UsageError(str(exc)) from None


def _labels(w) -> str:
    return "(" + ", ".join(str(x) for x in w) + ")"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_admissible(args, out) -> int:
    d = _diagram(args.diagram)
    try:
        nodes = admissible_nodes(d)
    except DiagramError as exc:
        raise UsageError(str(exc)) from None
    out.write(" ".join(map(str, nodes)) + "\n")
    return EXIT_OK


def cmd_surgery(args, out) -> int:
    d = _diagram(args.diagram)
    try:
        res = surgery(d, args.node)
    except (DiagramError, InadmissibleNode) as exc:
        raise UsageError(str(exc)) from None
    except IrreducibilityError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    m = res.module
    try:
        row = str(catalog.match_module(m))
    except catalog.CatalogError:
        row = "none (V2 is empty)" if m.is_degenerate else "none"
    if args.json:
        payload = to_json_dict(res)
        payload["census"] = list(grade_census(res))
        payload["catalog_row"] = row
        out.write(_dump(payload) + "\n")
        return EXIT_OK
    out.write(f"source       {d} node {args.node}\n")
    out.write(f"sub-diagram  {m.diagram if m.diagram.components else '(empty)'}\n")
    out.write(f"source nodes {' '.join(map(str, m.source_nodes))}\n")
    out.write(f"highest      {_labels(m.highest)}\n")
    out.write(f"N            {m.N}\n")
    out.write(f"census       {grade_census(res)}\n")
    out.write(f"catalog row  {row}\n")
    for j in (0, 1, 2):
        for w in m.by_grade(j):
            out.write(f"  V{j}  {_labels(w)}\n")
    return EXIT_OK


def cmd_weights(args, out) -> int:
    d = _diagram(args.diagram)
    if len(args.labels) != d.rank:
        raise UsageError(f"{d} needs {d.rank} labels, got {len(args.labels)}")
    try:
        mod = weight_system(d, args.labels, cap=args.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except WeightCapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    items = mod.sorted_weights()
    if args.json:
        out.write(_dump({"diagram": str(d), "highest": list(mod.highest), "dimension": mod.dimension,
                         "weights": [{"labels": list(w), "multiplicity": k} for w, k in items]}) + "\n")
        return EXIT_OK
    out.write(f"dimension {mod.dimension}, {len(items)} distinct weights\n")
    for w, k in items:
        out.write(f"  {_labels(w)}  x{k}\n")
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    rows = catalog.catalog_dump()
    if args.json:
        out.write(_dump(rows) + "\n")
        return EXIT_OK
    for row in rows:
        out.write(f"{row['family']:<9} {row['quotient']:<42} V = {row['V']:<22} N = {row['N']:<16} {row['conditions']}\n")
        for rf in row["real_forms"]:
            formula = f"  [{rf['formula']}]" if rf["formula"] else ""
            out.write(f"    {rf['inner']}  ->  {rf['outer']}  ({rf['parameters'] or '-'}){formula}\n")
    return EXIT_OK


def _print_report(report: VerifyReport, out, as_json: bool) -> int:
    if as_json:
        out.write(_dump(report.to_dict()) + "\n")
    else:
        for r in report.records:
            out.write(f"{r.status.upper():<8} {r.id}  {r.detail}\n")
            if r.status == FAIL and r.witness:
                out.write(f"         witness: {json.dumps(r.witness, sort_keys=True)[:2000]}\n")
        c = report.counts()
        out.write(f"{report.suite}: {c['pass']} pass, {c['fail']} fail, {c['finding']} finding\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_realize(args, out) -> int:
    try:
        q = build_realization(args.family, args.params, r=args.r)
    except (UnsupportedFamily, ValueError) as exc:
        raise UsageError(str(exc)) from None
    except RealizationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    if args.check:
        report = VerifyReport(f"realize {q.family}")
        report.extend(check_realization(q, samples=args.samples))
        return _print_report(report, out, args.json)
    if args.json:
        out.write(_dump({"family": q.family, "params": list(q.params), "g_tilde": str(q.diagram),
                         "blocks": list(q.blocks), "basis": [
                             {"name": n, "weight": list(w), "grade": g}
                             for n, w, g in zip(q.names, q.weights, q.grades)]}) + "\n")
        return EXIT_OK
    out.write(f"{q.family} {' '.join(map(str, q.params))}: g~ = {q.diagram}, dim V = {q.dim}, blocks {q.blocks}\n")
    for n, w, g in zip(q.names, q.weights, q.grades):
        out.write(f"  V{g}  {n:<14} {_labels(w)}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    return _print_report(run_suite(args.suite), out, args.json)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="extrinsic-lie", description="Dynkin surgery and exact checks for symplectic extrinsic quintuples.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("admissible", help="nodes with coefficient 1 in the highest root")
    s.add_argument("diagram")
    s.set_defaults(func=cmd_admissible)

    s = sub.add_parser("surgery", help="graded module V from (diagram, node)")
    s.add_argument("diagram")
    s.add_argument("node", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_surgery)

    s = sub.add_parser("weights", help="weight system of an irreducible module")
    s.add_argument("diagram")
    s.add_argument("labels", type=int, nargs="+")
    s.add_argument("--cap", type=int, default=100_000)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_weights)

    s = sub.add_parser("catalog", help="classification tables")
    s.add_argument("action", choices=["list"])
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("realize", help="matrix model of a family inside sl(V)")
    s.add_argument("family", help=", ".join(FAMILIES))
    s.add_argument("params", type=int, nargs="*")
    s.add_argument("--check", action="store_true")
    s.add_argument("--r", default="1", help="scale of the symplectic form")
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=["all"] + list(SUITES))
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
