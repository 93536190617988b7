"""Simple symplectic symmetric triples at the level of Dynkin diagrams.

A triple is encoded by a connected diagram, a distinguished node whose
coefficient in every root lies in {-1, 0, 1}, and a scale ``r`` for the
symplectic form (``r = 1`` is the canonical one). ``r`` never enters the
combinatorics.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .rootsys import (
    DiagramError,
    DynkinDiagram,
    RootVector,
    cartan_matrix,
    connected_components,
    highest_root,
    identify_component,
    lie_algebra_dimension,
    positive_roots,
    root_coefficient,
    sub_cartan,
)


class InadmissibleNode(ValueError):
    """The node does not give a three-step grading; ``witness`` is a root with coefficient >= 2."""

    def __init__(self, diagram: DynkinDiagram, node: int, witness: RootVector):
        self.diagram = diagram
        self.node = node
        self.witness = witness
        super().__init__(
            f"node {node} of {diagram} is not admissible: root {witness} has coefficient "
            f"{witness[node - 1]} there"
        )


def admissible_nodes(diagram: DynkinDiagram) -> List[int]:
    """Nodes whose coefficient in every root is -1, 0 or 1."""
    if not diagram.is_connected:
        raise DiagramError("admissible_nodes needs a connected diagram")
    theta = highest_root(diagram)
    return [i + 1 for i, c in enumerate(theta) if c == 1]


def admissible_nodes_bruteforce(diagram: DynkinDiagram) -> List[int]:
    """Same set, checked against every positive root instead of the highest one."""
    roots = positive_roots(diagram)
    return [node for node in diagram.nodes() if all(root_coefficient(r, node) <= 1 for r in roots)]


@dataclass(frozen=True)
class DefiningQuadruple:
    diagram: DynkinDiagram
    node: int
    r: Fraction = Fraction(1)

    @property
    def label(self) -> str:
        return f"{self.diagram}/{self.node}"


def make_quadruple(diagram: DynkinDiagram, node: int, r=1) -> DefiningQuadruple:
    if not diagram.is_connected:
        raise DiagramError("a defining quadruple needs a connected diagram")
    diagram.check_node(node)
    for root in positive_roots(diagram):
        if root_coefficient(root, node) >= 2:
            raise InadmissibleNode(diagram, node, root)
    r = Fraction(r)
    if r == 0:
        raise ValueError("the scale r must be nonzero")
    return DefiningQuadruple(diagram, node, r)


@dataclass(frozen=True)
class SubComponent:
    """A connected piece of the node-deleted diagram, in source numbering."""

    letter: str
    rank: int
    nodes: Tuple[int, ...]  # source nodes listed in Bourbaki order of the piece
    neighbor: Optional[int]  # source node adjacent to the deleted node, if any

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"


@dataclass(frozen=True)
class IsotropySplit:
    center_node: int
    retained: Tuple[int, ...]  # increasing source node numbers
    components: Tuple[SubComponent, ...]
    neighbors: Tuple[int, ...]

    @property
    def sub_diagram(self) -> Optional[DynkinDiagram]:
        if not self.components:
            return None
        return DynkinDiagram(tuple((c.letter, c.rank) for c in self.components))


def isotropy_split(q: DefiningQuadruple) -> IsotropySplit:
    """Delete the distinguished node and classify what is left."""
    a = cartan_matrix(q.diagram)
    retained = tuple(n for n in q.diagram.nodes() if n != q.node)
    neighbors = tuple(n for n in retained if a[q.node - 1][n - 1] != 0)
    comps = []
    for nodes in connected_components(q.diagram, retained):
        letter, rank, order = identify_component(sub_cartan(q.diagram, nodes))
        ordered = tuple(nodes[k] for k in order)
        nbr = [n for n in ordered if n in neighbors]
        comps.append(SubComponent(letter, rank, ordered, nbr[0] if nbr else None))
    return IsotropySplit(q.node, retained, tuple(comps), neighbors)


def grading_dims(q: DefiningQuadruple) -> Tuple[int, int]:
    """``(dim h, dim p)`` of the grading by the coefficient at the distinguished node."""
    pos = positive_roots(q.diagram)
    zero = sum(1 for r in pos if root_coefficient(r, q.node) == 0)
    one = sum(1 for r in pos if root_coefficient(r, q.node) == 1)
    dim_h = q.diagram.rank + 2 * zero
    dim_p = 2 * one
    assert dim_h + dim_p == lie_algebra_dimension(q.diagram)
    return dim_h, dim_p


def isotropy_rank(q: DefiningQuadruple) -> int:
    """Rank of the isotropy algebra: the center line plus the semisimple part's Cartan."""
    split = isotropy_split(q)
    return 1 + sum(c.rank for c in split.components)
