"""Dynkin surgery: from a defining quadruple to the graded module V = V0 + V1 + V2.

Deleting the distinguished node ``a0`` leaves the diagram of the semisimple
part of the isotropy algebra. The roots with coefficient 1 at ``a0`` span a
module for it; we take their negatives, so that ``-a0`` restricts to the
highest weight and the grade of ``-alpha`` is the sum of the coefficients of
``alpha`` at the neighbours of ``a0``. The grade then counts how far a weight
sits below the highest one.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .irreps import weight_system
from .rootsys import (
    DynkinDiagram,
    WeightVector,
    cartan_matrix,
    diagram_automorphisms,
    identify_component,
    inner_product,
    labels_to_roots,
    positive_roots,
    root_coefficient,
    roots_to_labels,
)
from .triples import DefiningQuadruple, isotropy_split, make_quadruple


class IrreducibilityError(RuntimeError):
    pass


@dataclass(frozen=True)
class GradedModule:
    """Weights of V, labelled on the sub-diagram's own Bourbaki numbering."""

    diagram: DynkinDiagram
    highest: WeightVector
    weights: Tuple[Tuple[WeightVector, int], ...]  # (labels, grade), sorted by labels
    source_nodes: Tuple[int, ...]  # source node behind each sub-diagram node
    alpha0_nodes: Tuple[int, ...]  # sub-diagram nodes standing for the neighbours of a0

    @property
    def N(self) -> int:
        return len(self.weights) - 1

    @property
    def dimension(self) -> int:
        return len(self.weights)

    def grade_of(self) -> Dict[WeightVector, int]:
        return dict(self.weights)

    def by_grade(self, j: int) -> List[WeightVector]:
        return [w for w, g in self.weights if g == j]

    @property
    def is_degenerate(self) -> bool:
        """True when V2 is empty: the embedding is the whole outer space."""
        return not self.by_grade(2)


@dataclass(frozen=True)
class ComponentQuadruple:
    letter: str
    rank: int
    node: int  # distinguished node, in the component's Bourbaki numbering
    r: Fraction = Fraction(1)


@dataclass(frozen=True)
class SurgeryResult:
    source: DefiningQuadruple
    module: GradedModule
    components: Tuple[ComponentQuadruple, ...] = field(default=())


def dynkin_surgery(q: DefiningQuadruple, check_irreducible: bool = True) -> SurgeryResult:
    split = isotropy_split(q)
    a = cartan_matrix(q.diagram)
    order: List[int] = [n for c in split.components for n in c.nodes]
    sub = DynkinDiagram(tuple((c.letter, c.rank) for c in split.components))
    position = {src: k for k, src in enumerate(order)}
    alpha0_nodes = tuple(position[c.neighbor] + 1 for c in split.components if c.neighbor is not None)

    degree_one = [r for r in positive_roots(q.diagram) if root_coefficient(r, q.node) == 1]
    weights = []
    for root in degree_one:
        labels = roots_to_labels(q.diagram, root)
        w = tuple(-labels[src - 1] for src in order)
        grade = sum(root_coefficient(root, nb) for nb in split.neighbors)
        weights.append((w, grade))
    highest = tuple(-a[src - 1][q.node - 1] for src in order)
    weights.sort()
    module = GradedModule(sub, highest, tuple(weights), tuple(order), alpha0_nodes)

    if check_irreducible:
        expected = weight_system(sub, highest).weights
        got = Counter(w for w, _ in weights)
        if dict(got) != expected:
            raise IrreducibilityError(f"weights of V for {q.label} differ from the irreducible module {highest}")

    comps = tuple(
        ComponentQuadruple(c.letter, c.rank, c.nodes.index(c.neighbor) + 1)
        for c in split.components
        if c.neighbor is not None
    )
    return SurgeryResult(q, module, comps)


def surgery(diagram: str | DynkinDiagram, node: int) -> SurgeryResult:
    d = DynkinDiagram.parse(diagram) if isinstance(diagram, str) else diagram
    return dynkin_surgery(make_quadruple(d, node))


def grade_census(result: SurgeryResult) -> Tuple[int, int, int]:
    m = result.module
    counts = Counter(g for _, g in m.weights)
    if set(counts) - {0, 1, 2}:
        raise ValueError(f"grades outside 0..2: {sorted(counts)}")
    return counts.get(0, 0), counts.get(1, 0), counts.get(2, 0)


def depth_coefficients(module: GradedModule, weight: Sequence[int]) -> Tuple[Fraction, ...]:
    """Simple-root coordinates of ``highest - weight``."""
    return labels_to_roots(module.diagram, [h - w for h, w in zip(module.highest, weight)])


@dataclass
class PairingPartition:
    grades: Dict[WeightVector, int]
    anomalies: List[Tuple[WeightVector, str]]

    def agrees_with(self, module: GradedModule) -> List[WeightVector]:
        """Weights where the pairing grade differs from the coefficient grade."""
        ref = module.grade_of()
        return sorted(w for w in ref if self.grades.get(w) != ref[w])


def pairing_partition(result: SurgeryResult, max_grade: int = 2) -> PairingPartition:
    """Grade each weight by the j solving ``(w - w0 + j a0, w0) = 0``.

    ``w0`` is the highest weight and ``a0`` the simple root at the
    distinguished node of the single component of the sub-diagram.
    """
    m = result.module
    if len(m.diagram.components) != 1 or len(m.alpha0_nodes) != 1:
        raise ValueError("the pairing partition is defined for a connected sub-diagram only")
    d = m.diagram
    a = cartan_matrix(d)
    k = m.alpha0_nodes[0] - 1
    alpha0 = tuple(a[j][k] for j in range(d.rank))
    w0 = m.highest
    slope = inner_product(d, alpha0, w0)
    grades: Dict[WeightVector, int] = {}
    anomalies: List[Tuple[WeightVector, str]] = []
    for w, _ in m.weights:
        base = inner_product(d, tuple(x - y for x, y in zip(w, w0)), w0)
        if slope == 0:
            anomalies.append((w, "every j solves" if base == 0 else "no j solves"))
            continue
        j = -base / slope
        if j.denominator != 1 or not 0 <= j <= max_grade:
            anomalies.append((w, f"solution j = {j} is not in 0..{max_grade}"))
            continue
        grades[w] = int(j)
    return PairingPartition(grades, anomalies)


# --- canonical forms (for matching against the catalog) -------------------

CanonicalForm = Tuple[Tuple[str, int, Tuple[int, ...]], ...]


def canonical_module(diagram: DynkinDiagram, labels: Sequence[int]) -> CanonicalForm:
    """Isomorphism-invariant description of (semisimple algebra, highest weight).

    Each component is re-identified from its Cartan matrix (so D3 reads as
    A3 and C2 as B2) and its labels are minimized over diagram automorphisms.
    """
    a = cartan_matrix(diagram)
    out = []
    for comp, off in zip(diagram.components, diagram.component_offsets()):
        idx = list(range(off, off + comp[1]))
        pieces = [[i] for i in idx] if comp == ("D", 2) else [idx]
        for piece in pieces:
            sub = [[a[i][j] for j in piece] for i in piece]
            letter, r, order = identify_component(sub)
            lab = [labels[piece[o]] for o in order]
            best = min(tuple(lab[p.index(k)] for k in range(r)) for p in diagram_automorphisms(letter, r))
            out.append((letter, r, best))
    return tuple(sorted(out))


def module_canonical_form(module: GradedModule) -> CanonicalForm:
    return canonical_module(module.diagram, module.highest)


def identify_catalog_row(result: SurgeryResult):
    """The unique catalog row (family, params) matching this surgery output."""
    from .catalog import match_module

    return match_module(result.module)


def to_json_dict(result: SurgeryResult) -> dict:
    m = result.module
    return {
        "source": str(result.source.diagram),
        "node": result.source.node,
        "components": [
            {"type": f"{c.letter}{c.rank}", "distinguished_node": c.node, "r": str(c.r)} for c in result.components
        ],
        "sub_diagram": str(m.diagram),
        "source_nodes": list(m.source_nodes),
        "highest_labels": list(m.highest),
        "weights": [{"labels": list(w), "grade": g} for w, g in m.weights],
        "N": m.N,
    }


def to_json(result: SurgeryResult) -> str:
    return json.dumps(to_json_dict(result), indent=2, sort_keys=False)
