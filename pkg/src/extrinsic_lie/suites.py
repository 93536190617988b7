"""Named verification suites, each producing a VerifyReport."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, List

from . import catalog
from .irreps import epsilon_view, weight_system
from .realize import GAUSS_SUITE, build_realization, check_realization
from .reports import CheckRecord, VerifyReport, check
from .rootsys import DynkinDiagram, connected_diagrams, diagram_automorphisms
from .surgery import grade_census, surgery
from .triples import admissible_nodes, admissible_nodes_bruteforce

EXPECTED_ADMISSIBLE = {
    "E6": [1, 6], "E7": [7], "E8": [], "F4": [], "G2": [],
}


def admissible_records(max_rank: int = 8) -> List[CheckRecord]:
    out = []
    for d in connected_diagrams(max_rank):
        fast, slow = admissible_nodes(d), admissible_nodes_bruteforce(d)
        letter, n = d.components[0]
        expected = {
            "A": list(range(1, n + 1)),
            "B": [1],
            "C": [n],
            "D": [1, n - 1, n],
        }.get(letter, EXPECTED_ADMISSIBLE.get(str(d)))
        out.append(check(f"admissible:{d}", fast == slow == expected, f"nodes {fast}",
                         {"highest_root": fast, "bruteforce": slow, "expected": expected}))
    return out


def halfspin_records() -> List[CheckRecord]:
    d5 = DynkinDiagram.simple("D", 5)
    half = Fraction(1, 2)
    ws = weight_system(d5, (0, 0, 0, 0, 1)).weights
    eps = sorted(epsilon_view(d5, w) for w in ws)
    expected = sorted(
        tuple(half if (mask >> i) & 1 else -half for i in range(5))
        for mask in range(32) if bin(mask).count("1") % 2 == 1
    )
    out = [check("halfspin:epsilon", eps == expected and set(ws.values()) == {1},
                 "weights of (0,0,0,0,1) are 1/2(+-1,...,+-1) with an odd number of plus signs")]
    res = surgery("E6", 1)
    m = res.module
    out.append(check("halfspin:census", grade_census(res) == (1, 10, 5), f"census {grade_census(res)}"))
    flip = tuple(p for p in diagram_automorphisms("D", 5) if p[3] == 4)[0]

    # surgery may land on the other half-spin labelling; swap nodes 4 and 5 then
    relabel = sum(1 for x in epsilon_view(m.diagram, m.highest) if x > 0) % 2 == 0
    bad = []
    for w, g in m.weights:
        if relabel:
            w = tuple(w[flip.index(k)] for k in range(5))
        plus = sum(1 for x in epsilon_view(m.diagram, w) if x > 0)
        if plus != 5 - 2 * g:
            bad.append([list(w), g, plus])
    out.append(check("halfspin:grading", m.diagram == d5 and not bad,
                     "grade j weights carry 5 - 2j plus signs (the weights of Lambda^(5-2j) E)", {"bad": bad}))
    return out


def gauss_records() -> List[CheckRecord]:
    out = []
    for fam, params in GAUSS_SUITE:
        out += check_realization(build_realization(fam, params))
    return out


def signature_records() -> List[CheckRecord]:
    out = catalog.tier1_records(8) + catalog.fixed_signature_checks()
    bad = []
    for a in range(0, 9):
        for b in range(0, 9):
            for kind in ("sym2", "wedge2"):
                if catalog.induced_signature(kind, (a, b)) != catalog.induced_signature_closed_form(kind, (a, b)):
                    bad.append([kind, a, b])
    for s1 in [(a, b) for a in range(5) for b in range(5)]:
        for s2 in [(a, b) for a in range(5) for b in range(5)]:
            if catalog.induced_signature("tensor", s1, s2) != catalog.induced_signature_closed_form("tensor", s1, s2):
                bad.append(["tensor", list(s1), list(s2)])
    out.append(check("signatures:closed forms", not bad, "enumeration equals closed forms", {"bad": bad}))
    return out + catalog.tier2_records(8, 3)


def bijection_records() -> List[CheckRecord]:
    out = catalog.bijection_records(8)
    for m in catalog.iter_instances(8):
        if catalog.get_row(m.family).source(*m.params)[0].rank <= 8:
            out += catalog.verify_complex_row(m.family, m.params)
    return out


SUITES: Dict[str, Callable[[], List[CheckRecord]]] = {
    "admissible": admissible_records,
    "bijection": bijection_records,
    "e6": catalog.e6_reference_check,
    "counts": catalog.count_formula_checks,
    "halfspin": halfspin_records,
    "gauss": gauss_records,
    "signatures": signature_records,
    "pairing": catalog.pairing_records,
}


def run_suite(name: str) -> VerifyReport:
    if name == "all":
        report = VerifyReport("all")
        for key, fn in SUITES.items():
            report.extend(fn())
        return report
    if name not in SUITES:
        raise KeyError(name)
    report = VerifyReport(name)
    report.extend(SUITES[name]())
    return report
