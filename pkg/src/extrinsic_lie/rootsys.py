"""Finite-type root systems.

Conventions used everywhere in the package:

* Nodes are numbered as in Bourbaki, 1-based within each component; a
  multi-component diagram numbers its nodes consecutively (component 0 first).
* Cartan matrix ``A[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``.
  Hence root coordinates ``m`` convert to Dynkin labels by ``labels = A m``.
* The invariant form is normalized so that short roots have squared length 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .linalg import Matrix, inverse

RootVector = Tuple[int, ...]
WeightVector = Tuple[int, ...]

class DiagramError(ValueError):
    """Invalid diagram, node or component request."""


def _check_rank(letter: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 2,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if letter not in ok:
        raise DiagramError(f"unknown type letter {letter!r}")
    if not ok[letter]:
        raise DiagramError(f"type {letter} does not exist in rank {rank}")


@dataclass(frozen=True)
class DynkinDiagram:
    """Disjoint union of finite-type Dynkin diagrams."""

    components: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        comps = tuple((str(l).upper(), int(r)) for l, r in self.components)
        for letter, rank in comps:
            _check_rank(letter, rank)
        object.__setattr__(self, "components", comps)

    @classmethod
    def parse(cls, text: str) -> "DynkinDiagram":
        """Parse ``"E6"`` or unions such as ``"A2xA3"``."""
        parts = [p for p in re.split(r"[x×*]", text.strip()) if p]
        if not parts:
            raise DiagramError(f"cannot parse diagram {text!r}")
        comps = []
        for p in parts:
            m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", p)
            if not m:
                raise DiagramError(f"cannot parse diagram component {p!r}")
            comps.append((m.group(1).upper(), int(m.group(2))))
        return cls(tuple(comps))

    @classmethod
    def simple(cls, letter: str, rank: int) -> "DynkinDiagram":
        return cls(((letter, rank),))

    def __str__(self) -> str:
        return "x".join(f"{l}{r}" for l, r in self.components) or "empty"

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1 and self.components[0] != ("D", 2)

    def component_offsets(self) -> List[int]:
        offs, total = [], 0
        for _, r in self.components:
            offs.append(total)
            total += r
        return offs

    def nodes(self) -> List[int]:
        return list(range(1, self.rank + 1))

    def check_node(self, node: int) -> None:
        if not 1 <= node <= self.rank:
            raise DiagramError(f"node {node} out of range 1..{self.rank} for {self}")


def _component_form(letter: str, rank: int) -> Tuple[List[int], Dict[Tuple[int, int], int]]:
    """Squared root lengths and nonzero off-diagonal inner products (0-based)."""
    n = rank
    lengths = [2] * n
    bonds: Dict[Tuple[int, int], int] = {}

    def chain(upto):
        for i in range(upto - 1):
            bonds[(i, i + 1)] = -1

    if letter == "A":
        chain(n)
    elif letter == "B":
        lengths = [4] * (n - 1) + [2]
        for i in range(n - 2):
            bonds[(i, i + 1)] = -2
        bonds[(n - 2, n - 1)] = -2
    elif letter == "C":
        lengths = [2] * (n - 1) + [4]
        chain(n - 1)
        bonds[(n - 2, n - 1)] = -2
    elif letter == "D":
        if n >= 3:
            chain(n - 1)
            bonds[(n - 3, n - 1)] = -1
    elif letter == "E":
        # 1-3-4-5-...-n with 2 attached to 4
        for a, b in [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]:
            bonds[(a, b)] = -1
    elif letter == "F":
        lengths = [4, 4, 2, 2]
        bonds[(0, 1)] = -2
        bonds[(1, 2)] = -2
        bonds[(2, 3)] = -1
    elif letter == "G":
        lengths = [2, 6]
        bonds[(0, 1)] = -3
    return lengths, bonds


@lru_cache(maxsize=None)
def _form(diagram: DynkinDiagram) -> Tuple[Tuple[Fraction, ...], ...]:
    n = diagram.rank
    s = [[Fraction(0)] * n for _ in range(n)]
    for (letter, rank), off in zip(diagram.components, diagram.component_offsets()):
        lengths, bonds = _component_form(letter, rank)
        for i, l in enumerate(lengths):
            s[off + i][off + i] = Fraction(l)
        for (i, j), v in bonds.items():
            s[off + i][off + j] = s[off + j][off + i] = Fraction(v)
    return tuple(tuple(r) for r in s)


def inner_product_form(diagram: DynkinDiagram) -> Matrix:
    """Symmetrized Cartan matrix ``(alpha_i, alpha_j)`` with short roots of length 2."""
    return [list(r) for r in _form(diagram)]


@lru_cache(maxsize=None)
def _cartan(diagram: DynkinDiagram) -> Tuple[Tuple[int, ...], ...]:
    s = _form(diagram)
    n = diagram.rank
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = 2 * s[i][j] / s[i][i]
            assert v.denominator == 1
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


def cartan_matrix(diagram: DynkinDiagram) -> List[List[int]]:
    return [list(r) for r in _cartan(diagram)]


def root_lengths(diagram: DynkinDiagram) -> List[Fraction]:
    s = _form(diagram)
    return [s[i][i] for i in range(diagram.rank)]


def roots_to_labels(diagram: DynkinDiagram, coeffs: Sequence) -> tuple:
    """Dynkin labels of a root-lattice element given in simple-root coordinates."""
    a = _cartan(diagram)
    vals = [sum(a[j][i] * coeffs[i] for i in range(len(coeffs))) for j in range(len(coeffs))]
    return tuple(vals)


@lru_cache(maxsize=None)
def _inverse_cartan(diagram: DynkinDiagram) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(r) for r in inverse(_cartan(diagram)))


def labels_to_roots(diagram: DynkinDiagram, labels: Sequence[int]) -> Tuple[Fraction, ...]:
    """Simple-root coordinates (rational) of a weight given by Dynkin labels."""
    inv = _inverse_cartan(diagram)
    n = diagram.rank
    return tuple(sum((inv[i][j] * labels[j] for j in range(n)), Fraction(0)) for i in range(n))


@lru_cache(maxsize=None)
def _positive_roots(diagram: DynkinDiagram) -> Tuple[RootVector, ...]:
    n = diagram.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    # beta + alpha_i is a root iff q > 0, where the alpha_i-string through
    # beta runs from beta - p alpha_i to beta + q alpha_i and p - q = <beta, alpha_i^vee>.
    while layer:
        nxt = []
        for beta in layer:
            labels = roots_to_labels(diagram, beta)
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                q = p - labels[i]
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(found, key=lambda r: (sum(r), r)))


def positive_roots(diagram: DynkinDiagram) -> List[RootVector]:
    """Positive roots in simple-root coordinates, sorted by height then lexicographically."""
    return list(_positive_roots(diagram))


def all_roots(diagram: DynkinDiagram) -> List[RootVector]:
    pos = positive_roots(diagram)
    return pos + [tuple(-x for x in r) for r in pos]


def highest_root(diagram: DynkinDiagram) -> RootVector:
    if not diagram.is_connected:
        raise DiagramError("highest_root needs a connected diagram")
    return max(_positive_roots(diagram), key=sum)


def root_coefficient(root: Sequence[int], node: int) -> int:
    """Coefficient of the simple root at ``node`` (1-based) in ``root``."""
    if not 1 <= node <= len(root):
        raise DiagramError(f"node {node} out of range")
    return root[node - 1]


def weyl_reflect(diagram: DynkinDiagram, weight: Sequence[int], node: int) -> WeightVector:
    """Simple reflection on Dynkin labels: ``s_i(l)_j = l_j - l_i * A[j][i]``."""
    diagram.check_node(node)
    i = node - 1
    a = _cartan(diagram)
    li = weight[i]
    return tuple(weight[j] - li * a[j][i] for j in range(len(weight)))


def weyl_reflect_root(diagram: DynkinDiagram, root: Sequence[int], node: int) -> RootVector:
    """Simple reflection in simple-root coordinates."""
    diagram.check_node(node)
    i = node - 1
    li = roots_to_labels(diagram, root)[i]
    out = list(root)
    out[i] -= li
    return tuple(out)


def inner_product(diagram: DynkinDiagram, x: Sequence, y: Sequence, *, kind: str = "labels") -> Fraction:
    """Invariant pairing of two weights (``kind="labels"``) or roots (``kind="roots"``)."""
    s = _form(diagram)
    n = diagram.rank
    if kind == "roots":
        mx, my = x, y
    elif kind == "labels":
        mx = labels_to_roots(diagram, x)
        # (x, y) = sum_i mx_i (alpha_i, y) and (alpha_i, y) = y_i |alpha_i|^2 / 2
        return sum((mx[i] * y[i] * s[i][i] / 2 for i in range(n)), Fraction(0))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return sum((Fraction(mx[i]) * s[i][j] * my[j] for i in range(n) for j in range(n)), Fraction(0))


def rho(diagram: DynkinDiagram) -> WeightVector:
    return tuple([1] * diagram.rank)


def dominant_representative(diagram: DynkinDiagram, weight: Sequence[int]) -> WeightVector:
    w = tuple(weight)
    while True:
        neg = next((i for i, x in enumerate(w) if x < 0), None)
        if neg is None:
            return w
        w = weyl_reflect(diagram, w, neg + 1)


def weyl_orbit(diagram: DynkinDiagram, weight: Sequence[int]) -> FrozenSet[WeightVector]:
    start = tuple(weight)
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for i in range(diagram.rank):
            if w[i] != 0:
                v = weyl_reflect(diagram, w, i + 1)
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return frozenset(seen)


def lie_algebra_dimension(diagram: DynkinDiagram) -> int:
    return diagram.rank + 2 * len(_positive_roots(diagram))


def component_of_node(diagram: DynkinDiagram, node: int) -> int:
    diagram.check_node(node)
    for idx, off in enumerate(diagram.component_offsets()):
        if node <= off + diagram.components[idx][1]:
            return idx
    raise DiagramError("unreachable")


def connected_diagrams(max_rank: int) -> List[DynkinDiagram]:
    """One representative of every connected diagram up to ``max_rank``.

    Low-rank coincidences are skipped: B2 stands for C2, D3 is A3 and D2 is
    A1 x A1.
    """
    out = []
    for r in range(1, max_rank + 1):
        out.append(DynkinDiagram.simple("A", r))
    for r in range(2, max_rank + 1):
        out.append(DynkinDiagram.simple("B", r))
    for r in range(3, max_rank + 1):
        out.append(DynkinDiagram.simple("C", r))
    for r in range(4, max_rank + 1):
        out.append(DynkinDiagram.simple("D", r))
    for r in (6, 7, 8):
        if r <= max_rank:
            out.append(DynkinDiagram.simple("E", r))
    if max_rank >= 4:
        out.append(DynkinDiagram.simple("F", 4))
    if max_rank >= 2:
        out.append(DynkinDiagram.simple("G", 2))
    return out


# --- identification of sub-diagrams -------------------------------------

def _adjacency(cartan: Sequence[Sequence[int]]) -> Dict[int, List[int]]:
    n = len(cartan)
    return {i: [j for j in range(n) if j != i and cartan[i][j] != 0] for i in range(n)}


def identify_component(cartan: Sequence[Sequence[int]]) -> Tuple[str, int, List[int]]:
    """Type of a connected Cartan matrix and a Bourbaki ordering of its nodes.

    Returns ``(letter, rank, order)`` where ``order[k]`` is the index (0-based,
    into ``cartan``) of Bourbaki node ``k + 1``. Raises ``DiagramError`` on a
    disconnected or non-finite-type matrix.
    """
    n = len(cartan)
    if n == 0:
        raise DiagramError("empty diagram")
    adj = _adjacency(cartan)
    seen, stack = {0}, [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != n:
        raise DiagramError("matrix is not connected")
    if n == 1:
        return "A", 1, [0]
    mult = {(i, j): cartan[i][j] * cartan[j][i] for i in range(n) for j in adj[i]}
    branch = [i for i in range(n) if len(adj[i]) >= 3]
    if len(branch) == 0:
        ends = [i for i in range(n) if len(adj[i]) == 1]
        if len(ends) != 2:
            raise DiagramError("cycle in diagram")

        def walk(start):
            path, prev = [start], None
            while len(path) < n:
                nxt = [j for j in adj[path[-1]] if j != prev][0]
                prev = path[-1]
                path.append(nxt)
            return path

        path = walk(min(ends))
        multis = [(path[k], path[k + 1]) for k in range(n - 1) if mult[(path[k], path[k + 1])] > 1]
        if not multis:
            result = ("A", n, path)
        elif len(multis) > 1:
            raise DiagramError("not of finite type")
        else:
            a, b = multis[0]
            m = mult[(a, b)]
            if m == 3:
                if n != 2:
                    raise DiagramError("not of finite type")
                short = a if cartan[a][b] == -3 else b
                result = ("G", 2, [short, a if short == b else b])
            elif m == 2:
                k = path.index(a)
                if n == 2:
                    long_ = a if cartan[a][b] == -1 else b
                    result = ("B", 2, [long_, b if long_ == a else a])
                elif k == 0 or k == n - 2:
                    if k == 0:
                        path = path[::-1]
                    last, prev = path[-1], path[-2]
                    letter = "B" if cartan[last][prev] == -2 else "C"
                    result = (letter, n, path)
                elif n == 4 and k == 1:
                    # double bond in the middle: orient with the long pair first
                    if cartan[path[1]][path[2]] != -1:
                        path = path[::-1]
                    result = ("F", 4, path)
                else:
                    raise DiagramError("not of finite type")
            else:
                raise DiagramError("not of finite type")
    else:
        if len(branch) > 1 or len(adj[branch[0]]) != 3 or any(v != 1 for v in mult.values()):
            raise DiagramError("not of finite type")
        c = branch[0]
        arms = []
        for start in adj[c]:
            arm, prev = [start], c
            while True:
                nxt = [j for j in adj[arm[-1]] if j != prev]
                if not nxt:
                    break
                prev = arm[-1]
                arm.append(nxt[0])
            arms.append(arm)
        arms.sort(key=lambda a: (len(a), a))
        lens = tuple(len(a) for a in arms)
        if lens[:2] == (1, 1):
            long_arm = arms[2]
            order = long_arm[::-1] + [c, arms[0][0], arms[1][0]]
            result = ("D", n, order)
        elif lens in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
            two, rest = arms[1], arms[2]
            order = [two[1], arms[0][0], two[0], c] + rest
            result = ("E", n, order)
        else:
            raise DiagramError("not of finite type")
    letter, rank, order = result
    ref = _cartan(DynkinDiagram.simple(letter, rank))
    for i in range(rank):
        for j in range(rank):
            if cartan[order[i]][order[j]] != ref[i][j]:
                raise DiagramError("identification failed")
    return result


def sub_cartan(diagram: DynkinDiagram, nodes: Sequence[int]) -> List[List[int]]:
    a = _cartan(diagram)
    return [[a[i - 1][j - 1] for j in nodes] for i in nodes]


def connected_components(diagram: DynkinDiagram, nodes: Iterable[int]) -> List[List[int]]:
    """Connected components (sorted node lists) of the full sub-diagram on ``nodes``."""
    a = _cartan(diagram)
    remaining = sorted(set(nodes))
    comps = []
    while remaining:
        start = remaining[0]
        comp, stack = {start}, [start]
        while stack:
            i = stack.pop()
            for j in remaining:
                if j not in comp and a[i - 1][j - 1] != 0:
                    comp.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
        remaining = [x for x in remaining if x not in comp]
    return comps


def diagram_automorphisms(letter: str, rank: int) -> List[Tuple[int, ...]]:
    """Node permutations (0-based images of Bourbaki nodes) preserving the diagram."""
    ident = tuple(range(rank))
    if letter == "A" and rank >= 2:
        return [ident, tuple(range(rank - 1, -1, -1))]
    if letter == "D" and rank == 4:
        from itertools import permutations

        out = []
        for p in permutations((0, 2, 3)):
            perm = [0, 1, 2, 3]
            for src, dst in zip((0, 2, 3), p):
                perm[src] = dst
            out.append(tuple(perm))
        return out
    if letter == "D" and rank >= 3:
        perm = list(range(rank))
        perm[rank - 2], perm[rank - 1] = rank - 1, rank - 2
        return [ident, tuple(perm)]
    if letter == "E" and rank == 6:
        return [ident, (5, 1, 4, 3, 2, 0)]
    return [ident]
