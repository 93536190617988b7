import pytest

from extrinsic_lie.rootsys import DiagramError, DynkinDiagram, connected_diagrams, lie_algebra_dimension
from extrinsic_lie.triples import (
    InadmissibleNode,
    admissible_nodes,
    admissible_nodes_bruteforce,
    grading_dims,
    isotropy_rank,
    isotropy_split,
    make_quadruple,
)

D = DynkinDiagram.parse


@pytest.mark.parametrize("d", connected_diagrams(8), ids=str)
def test_highest_root_shortcut_matches_bruteforce(d):
    assert admissible_nodes(d) == admissible_nodes_bruteforce(d)


@pytest.mark.parametrize("text,nodes", [
    ("A5", [1, 2, 3, 4, 5]), ("B4", [1]), ("C4", [4]), ("D5", [1, 4, 5]),
    ("E6", [1, 6]), ("E7", [7]), ("E8", []), ("F4", []), ("G2", []),
])
def test_cominuscule_nodes(text, nodes):
    assert admissible_nodes(D(text)) == nodes


def test_inadmissible_witness():
    with pytest.raises(InadmissibleNode) as info:
        make_quadruple(D("E8"), 8)
    assert info.value.witness[7] >= 2


def test_quadruple_validation():
    with pytest.raises(DiagramError):
        make_quadruple(D("A2xA2"), 1)
    with pytest.raises(DiagramError):
        make_quadruple(D("A3"), 4)
    with pytest.raises(ValueError):
        make_quadruple(D("A3"), 1, r=0)
    assert make_quadruple(D("A3"), 2, r=3).r == 3


@pytest.mark.parametrize("text,node", [(str(d), n) for d in connected_diagrams(7) for n in admissible_nodes(d)])
def test_grading_dims(text, node):
    q = make_quadruple(D(text), node)
    dim_h, dim_p = grading_dims(q)
    assert dim_h + dim_p == lie_algebra_dimension(q.diagram)
    # h = center + semisimple part of the deleted diagram
    split = isotropy_split(q)
    sub = split.sub_diagram
    semisimple = lie_algebra_dimension(sub) if sub else 0
    assert dim_h == 1 + semisimple
    assert isotropy_rank(q) == q.diagram.rank


@pytest.mark.parametrize("text,node,expected", [
    ("A5", 3, [("A", 2), ("A", 2)]),
    ("E7", 7, [("E", 6)]),
    ("E6", 1, [("D", 5)]),
    ("D6", 6, [("A", 5)]),
    ("C4", 4, [("A", 3)]),
    ("B4", 1, [("B", 3)]),
    ("D4", 1, [("A", 3)]),
    ("A1", 1, []),
])
def test_isotropy_split(text, node, expected):
    split = isotropy_split(make_quadruple(D(text), node))
    assert [(c.letter, c.rank) for c in split.components] == expected
    assert all(c.neighbor is not None for c in split.components)
