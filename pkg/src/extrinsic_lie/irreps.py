"""Weight systems of irreducible highest-weight modules."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .rootsys import (
    DiagramError,
    DynkinDiagram,
    WeightVector,
    dominant_representative,
    inner_product,
    labels_to_roots,
    positive_roots,
    roots_to_labels,
    weyl_orbit,
)

DEFAULT_WEIGHT_CAP = 100_000


class WeightCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class HighestWeightModule:
    diagram: DynkinDiagram
    highest: WeightVector
    weights: Dict[WeightVector, int] = field(hash=False, compare=False)

    @property
    def dimension(self) -> int:
        return sum(self.weights.values())

    def sorted_weights(self) -> List[Tuple[WeightVector, int]]:
        return sorted(self.weights.items())


def _check_dominant(diagram: DynkinDiagram, highest: Sequence[int]) -> WeightVector:
    hw = tuple(int(x) for x in highest)
    if len(hw) != diagram.rank:
        raise DiagramError(f"expected {diagram.rank} labels, got {len(hw)}")
    if any(x < 0 for x in hw):
        raise ValueError(f"highest weight {hw} is not dominant")
    return hw


def weyl_dimension(diagram: DynkinDiagram, highest: Sequence[int]) -> int:
    """Product over positive roots of ``(lambda + rho, alpha) / (rho, alpha)``."""
    hw = _check_dominant(diagram, highest)
    lengths = [inner_product(diagram, r, r, kind="roots") for r in _simple(diagram)]
    num = Fraction(1)
    for alpha in positive_roots(diagram):
        # (mu, alpha) = sum_i alpha_i * mu_i * |alpha_i|^2 / 2 for labels mu
        a = sum(((hw[i] + 1) * alpha[i] * lengths[i] for i in range(diagram.rank)), Fraction(0))
        b = sum((alpha[i] * lengths[i] for i in range(diagram.rank)), Fraction(0))
        num *= a / b
    assert num.denominator == 1
    return int(num)


def _simple(diagram: DynkinDiagram):
    n = diagram.rank
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


def dominant_weights_below(diagram: DynkinDiagram, highest: Sequence[int]) -> List[WeightVector]:
    """Dominant weights mu <= highest, found by subtracting positive roots."""
    hw = _check_dominant(diagram, highest)
    pos_labels = [roots_to_labels(diagram, r) for r in positive_roots(diagram)]
    seen = {hw}
    stack = [hw]
    while stack:
        mu = stack.pop()
        for a in pos_labels:
            nu = tuple(x - y for x, y in zip(mu, a))
            if all(x >= 0 for x in nu) and nu not in seen:
                seen.add(nu)
                stack.append(nu)
    return sorted(seen, key=lambda mu: _depth(diagram, hw, mu))


def _depth(diagram: DynkinDiagram, hw: WeightVector, mu: Sequence[int]) -> Fraction:
    return sum(labels_to_roots(diagram, [x - y for x, y in zip(hw, mu)]), Fraction(0))


def dominant_multiplicities(diagram: DynkinDiagram, highest: Sequence[int]) -> Dict[WeightVector, int]:
    """Freudenthal recursion on the dominant weights, in order of depth."""
    hw = _check_dominant(diagram, highest)
    rho = tuple([1] * diagram.rank)
    pos = positive_roots(diagram)
    pos_labels = [roots_to_labels(diagram, r) for r in pos]

    def norm(v):
        return inner_product(diagram, v, v)

    top = norm(tuple(x + r for x, r in zip(hw, rho)))
    mult: Dict[WeightVector, int] = {}
    for mu in dominant_weights_below(diagram, hw):
        if mu == hw:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for a in pos_labels:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                m = mult.get(dominant_representative(diagram, nu), 0)
                if not m:
                    break
                total += m * inner_product(diagram, nu, a)
                k += 1
        denom = top - norm(tuple(x + r for x, r in zip(mu, rho)))
        value = 2 * total / denom
        assert value.denominator == 1 and value >= 0
        mult[mu] = int(value)
    return {mu: m for mu, m in mult.items() if m}


def weight_system(diagram: DynkinDiagram, highest: Sequence[int], cap: int = DEFAULT_WEIGHT_CAP) -> HighestWeightModule:
    """All weights with multiplicities of the irreducible module of highest weight ``highest``."""
    hw = _check_dominant(diagram, highest)
    weights: Dict[WeightVector, int] = {}
    for mu, m in dominant_multiplicities(diagram, hw).items():
        for w in weyl_orbit(diagram, mu):
            weights[w] = m
            if len(weights) > cap:
                raise WeightCapExceeded(f"more than {cap} distinct weights")
    return HighestWeightModule(diagram, hw, weights)


def restrict_weight(diagram: DynkinDiagram, weight: Sequence[int], retained: Sequence[int]) -> WeightVector:
    """Labels at the retained nodes (1-based, in the given order)."""
    for node in retained:
        diagram.check_node(node)
    if len(set(retained)) != len(retained):
        raise DiagramError("retained nodes repeat")
    return tuple(weight[i - 1] for i in retained)


# --- epsilon coordinates ---------------------------------------------------

def epsilon_view(diagram: DynkinDiagram, labels: Sequence[int]) -> Tuple[Fraction, ...]:
    """Orthonormal-coordinate view of a weight of a connected A, B, C or D diagram."""
    if not diagram.is_connected:
        raise DiagramError("epsilon view needs a connected diagram")
    letter, n = diagram.components[0]
    m = labels_to_roots(diagram, labels)
    if letter == "A":
        size = n + 1
        simple = [_unit(size, i) - _unit(size, i + 1) for i in range(n)]
    elif letter in "BCD":
        size = n
        simple = [_unit(size, i) - _unit(size, i + 1) for i in range(n - 1)]
        if letter == "B":
            simple.append(_unit(size, n - 1))
        elif letter == "C":
            simple.append(2 * _unit(size, n - 1))
        else:
            simple.append(_unit(size, n - 2) + _unit(size, n - 1))
    else:
        raise DiagramError(f"no epsilon view for type {letter}")
    out = _Vec([Fraction(0)] * size)
    for c, s in zip(m, simple):
        out = out + c * s
    return tuple(out)


class _Vec(list):
    def __add__(self, other):
        return _Vec([a + b for a, b in zip(self, other)])

    def __sub__(self, other):
        return _Vec([a - b for a, b in zip(self, other)])

    def __rmul__(self, c):
        return _Vec([c * a for a in self])


def _unit(size: int, i: int) -> _Vec:
    v = _Vec([Fraction(0)] * size)
    v[i] = Fraction(1)
    return v
