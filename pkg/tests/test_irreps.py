from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extrinsic_lie.irreps import (
    WeightCapExceeded,
    dominant_multiplicities,
    epsilon_view,
    restrict_weight,
    weight_system,
    weyl_dimension,
)
from extrinsic_lie.rootsys import DiagramError, DynkinDiagram, connected_diagrams, highest_root, roots_to_labels, weyl_orbit

D = DynkinDiagram.parse


@pytest.mark.parametrize("text,labels,dim", [
    ("E6", (1, 0, 0, 0, 0, 0), 27),
    ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
    ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248),
    ("D5", (0, 0, 0, 0, 1), 16),
    ("G2", (1, 0), 7),
    ("F4", (0, 0, 0, 1), 26),
    ("B3", (0, 0, 1), 8),
    ("C3", (0, 0, 1), 14),
])
def test_known_dimensions(text, labels, dim):
    d = D(text)
    assert weyl_dimension(d, labels) == dim
    assert weight_system(d, labels).dimension == dim


@pytest.mark.parametrize("n", range(1, 7))
def test_fundamental_sl_modules_are_exterior_powers(n):
    d = DynkinDiagram.simple("A", n)
    for k in range(1, n + 1):
        labels = tuple(int(i == k - 1) for i in range(n))
        ws = weight_system(d, labels)
        assert ws.dimension == comb(n + 1, k)
        assert set(ws.weights.values()) == {1}


@pytest.mark.parametrize("d", [x for x in connected_diagrams(6) if x.rank <= 5] + [D("E6")], ids=str)
def test_adjoint_zero_weight_is_rank(d):
    hw = roots_to_labels(d, highest_root(d))
    ws = weight_system(d, hw).weights
    assert ws[tuple([0] * d.rank)] == d.rank


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([D(t) for t in ("A2", "A3", "B2", "B3", "C3", "D4", "G2")]), st.data())
def test_freudenthal_total_equals_weyl(d, data):
    hw = tuple(data.draw(st.lists(st.integers(0, 2), min_size=d.rank, max_size=d.rank)))
    ws = weight_system(d, hw)
    assert ws.dimension == weyl_dimension(d, hw)
    for mu, m in dominant_multiplicities(d, hw).items():
        assert all(ws.weights[w] == m for w in weyl_orbit(d, mu))


def test_multiplicity_example():
    # sl3 adjoint: six roots plus a doubled zero weight
    assert dominant_multiplicities(D("A2"), (1, 1)) == {(1, 1): 1, (0, 0): 2}


def test_bad_inputs():
    with pytest.raises(ValueError):
        weyl_dimension(D("A2"), (-1, 0))
    with pytest.raises(DiagramError):
        weight_system(D("A2"), (1, 0, 0))
    with pytest.raises(WeightCapExceeded):
        weight_system(D("A3"), (2, 2, 2), cap=10)


def test_restrict_weight():
    d = D("E7")
    assert restrict_weight(d, (1, 2, 3, 4, 5, 6, 7), [1, 2, 3, 4, 5, 6]) == (1, 2, 3, 4, 5, 6)
    with pytest.raises(DiagramError):
        restrict_weight(d, (0,) * 7, [1, 1])
    with pytest.raises(DiagramError):
        restrict_weight(d, (0,) * 7, [8])


def test_epsilon_view():
    half = Fraction(1, 2)
    assert epsilon_view(D("D5"), (0, 0, 0, 0, 1)) == (half,) * 5
    assert epsilon_view(D("B3"), (1, 0, 0)) == (1, 0, 0)
    assert epsilon_view(D("C3"), (0, 0, 1)) == (1, 1, 1)
    # A2 fundamental weight omega1 = e0 - (e0+e1+e2)/3 shows up up to the trace line
    v = epsilon_view(D("A2"), (1, 0))
    assert v[0] - v[1] == 1 and v[1] == v[2]
    with pytest.raises(DiagramError):
        epsilon_view(D("E6"), (0,) * 6)
