"""Exact matrix models of the quintuple inside sl(V).

Each realizable family is built from Chevalley generators acting on an
explicit weight basis of V. The basis is reordered as V0 | V1 | V2, where
the grade of a weight is the coefficient of the distinguished node(s) in
``highest - weight``. With

    sigma = Ad(diag(+1 on V0, -1 on V1 + V2))
    theta = Ad(diag(-1 on V1, +1 on V0 + V2))

the theta-odd part of rho(g~) is the graph of a linear map
``lambda: p_minus -> h_minus`` with p_minus the V0<->V1 blocks and h_minus
the V1<->V2 blocks. Every check works in exact rationals.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import Span, SparseMatrix, bracket, determinant
from .reports import FINDING, PASS, CheckRecord, check
from .rootsys import DynkinDiagram, cartan_matrix, labels_to_roots

FAMILIES = ("sym2", "wedge2", "standard-so", "tensor", "halfspin-D5")
_ALIASES = {"standard": "standard-so", "halfspin": "halfspin-D5", "so": "standard-so"}
_PARAMS = {"sym2": ("n",), "wedge2": ("n",), "standard-so": ("n",), "tensor": ("a", "b"), "halfspin-D5": ()}


class UnsupportedFamily(ValueError):
    pass


class RealizationError(RuntimeError):
    """A structural precondition of the construction failed."""


# --- generator models ------------------------------------------------------

@dataclass(frozen=True)
class Model:
    diagram: DynkinDiagram
    e: Tuple[SparseMatrix, ...]
    f: Tuple[SparseMatrix, ...]
    h: Tuple[SparseMatrix, ...]
    names: Tuple[str, ...]


def _sl_standard(n: int) -> Model:
    """sl(n+1) on C^{n+1} with basis e0..en."""
    size = n + 1
    e = tuple(SparseMatrix.unit(size, i - 1, i) for i in range(1, n + 1))
    f = tuple(SparseMatrix.unit(size, i, i - 1) for i in range(1, n + 1))
    h = tuple(SparseMatrix.diagonal([int(k == i - 1) - int(k == i) for k in range(size)]) for i in range(1, n + 1))
    return Model(DynkinDiagram.simple("A", n), e, f, h, tuple(f"e{k}" for k in range(size)))


def _so_split(size: int) -> Model:
    """so(size) preserving the antidiagonal form, basis e1..em, [e0], e-m..e-1."""
    m, odd = divmod(size, 2)
    if m < 2 or (not odd and m < 3):
        raise UnsupportedFamily(f"so({size}) is not simple")
    labels = list(range(1, m + 1)) + ([0] if odd else []) + list(range(-m, 0))
    pos = {k: i for i, k in enumerate(labels)}

    def E(a, b, c=1):
        return SparseMatrix.unit(size, pos[a], pos[b], c)

    e, f = [], []
    for i in range(1, m):
        x = E(i, i + 1) - E(-(i + 1), -i)
        e.append(x)
        f.append(x.transpose())
    if odd:
        x = E(m, 0) - E(0, -m)
        e.append(x)
        f.append(E(0, m, 2) - E(-m, 0, 2))
        letter = "B"
    else:
        x = E(m - 1, -m) - E(m, -(m - 1))
        e.append(x)
        f.append(x.transpose())
        letter = "D"
    h = [bracket(a, b) for a, b in zip(e, f)]
    names = tuple(f"e{k}" if k >= 0 else f"e-{-k}" for k in labels)
    return Model(DynkinDiagram.simple(letter, m), tuple(e), tuple(f), tuple(h), names)


def _on_pairs(x: SparseMatrix, kind: str) -> SparseMatrix:
    """The derivation induced by ``x`` on S^2 or Lambda^2 of its space."""
    n = x.n
    pairs = list(combinations_with_replacement(range(n), 2) if kind == "sym2" else combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    out: Dict[Tuple[int, int], Fraction] = {}

    def put(i, j, col, v):
        if i == j and kind == "wedge2":
            return
        sign = 1
        if i > j:
            i, j = j, i
            sign = -1 if kind == "wedge2" else 1
        key = (index[(i, j)], col)
        out[key] = out.get(key, 0) + sign * v

    for col, (i, j) in enumerate(pairs):
        for (a, b), v in x.entries.items():
            if b == i:
                put(a, j, col, v)
            if b == j:
                put(i, a, col, v)
    return SparseMatrix(len(pairs), out)


def _pair_model(n: int, kind: str) -> Model:
    base = _sl_standard(n)
    pairs = list(combinations_with_replacement(range(n + 1), 2) if kind == "sym2" else combinations(range(n + 1), 2))
    sep = "." if kind == "sym2" else "^"
    return Model(
        base.diagram,
        tuple(_on_pairs(x, kind) for x in base.e),
        tuple(_on_pairs(x, kind) for x in base.f),
        tuple(_on_pairs(x, kind) for x in base.h),
        tuple(f"e{i}{sep}e{j}" for i, j in pairs),
    )


def _kron_identity(x: SparseMatrix, m: int, left: bool) -> SparseMatrix:
    """x (x) 1 when ``left`` else 1 (x) x, with basis index i*m + j."""
    out = {}
    if left:
        for (a, b), v in x.entries.items():
            for j in range(m):
                out[(a * m + j, b * m + j)] = v
        return SparseMatrix(x.n * m, out)
    for (a, b), v in x.entries.items():
        for i in range(m):
            out[(i * x.n + a, i * x.n + b)] = v
    return SparseMatrix(x.n * m, out)


def _tensor_model(a: int, b: int) -> Model:
    A, B = _sl_standard(a), _sl_standard(b)

    def both(xs, ys):
        return tuple(_kron_identity(x, b + 1, True) for x in xs) + tuple(_kron_identity(y, a + 1, False) for y in ys)

    return Model(
        DynkinDiagram((("A", a), ("A", b))),
        both(A.e, B.e), both(A.f, B.f), both(A.h, B.h),
        tuple(f"u{i}(x)v{j}" for i in range(a + 1) for j in range(b + 1)),
    )


def _direct_sum(models: Sequence[Model]) -> Model:
    """Block-diagonal sum, used as a faithful reference for products."""
    size = sum(len(m.names) for m in models)
    off = 0
    gens = {"e": [], "f": [], "h": []}
    for m in models:
        for key in gens:
            for x in getattr(m, key):
                gens[key].append(SparseMatrix(size, {(i + off, j + off): v for (i, j), v in x.entries.items()}))
        off += len(m.names)
    diagram = DynkinDiagram(tuple(c for m in models for c in m.diagram.components))
    return Model(diagram, tuple(gens["e"]), tuple(gens["f"]), tuple(gens["h"]), tuple(f"b{k}" for k in range(size)))


def _halfspin_model() -> Model:
    """so(10) on the odd part of the exterior algebra of C^5.

    e_i = w_i c_{i+1} and f_i = w_{i+1} c_i for i < 5, e_5 = w_4 w_5 and
    f_5 = c_5 c_4, where w_k is wedging with the k-th basis vector and c_k
    the contraction against it.
    """
    subsets = sorted((s for k in (5, 3, 1) for s in combinations(range(1, 6), k)), key=lambda s: (-len(s), s))
    index = {s: i for i, s in enumerate(subsets)}
    size = len(subsets)

    def op(word: Sequence[Tuple[str, int]]) -> SparseMatrix:
        out = {}
        for s in subsets:
            cur, sign = list(s), 1
            for kind, k in reversed(word):
                before = sum(1 for t in cur if t < k)
                if kind == "w":
                    if k in cur:
                        sign = 0
                        break
                    cur = sorted(cur + [k])
                else:
                    if k not in cur:
                        sign = 0
                        break
                    cur.remove(k)
                sign *= (-1) ** before
            if sign:
                out[(index[tuple(cur)], index[s])] = sign
        return SparseMatrix(size, out)

    e = [op([("w", i), ("c", i + 1)]) for i in range(1, 5)] + [op([("w", 4), ("w", 5)])]
    f = [op([("w", i + 1), ("c", i)]) for i in range(1, 5)] + [op([("c", 5), ("c", 4)])]
    h = [bracket(x, y) for x, y in zip(e, f)]
    names = tuple("^".join(f"e{k}" for k in s) for s in subsets)
    return Model(DynkinDiagram.simple("D", 5), tuple(e), tuple(f), tuple(h), names)


def normalize_family(family: str) -> str:
    fam = _ALIASES.get(family, family)
    if fam not in FAMILIES:
        raise UnsupportedFamily(
            f"no matrix model for {family!r}; realizable families: {', '.join(FAMILIES)} "
            "(the 27-dimensional E6 module is covered by weights only)"
        )
    return fam


def _check_params(family: str, params: Sequence[int]) -> Tuple[int, ...]:
    params = tuple(int(p) for p in params)
    names = _PARAMS[family]
    if len(params) != len(names):
        raise ValueError(f"{family} takes parameters {names or '()'}, got {params}")
    floors = {
        "sym2": lambda n: n >= 1,
        "wedge2": lambda n: n >= 4,
        "standard-so": lambda n: n >= 4,
        "tensor": lambda a, b: 1 <= a <= b,
        "halfspin-D5": lambda: True,
    }
    if not floors[family](*params):
        cond = {"sym2": "n >= 1", "wedge2": "n >= 4", "standard-so": "n >= 4", "tensor": "1 <= a <= b"}[family]
        raise ValueError(f"{family}({', '.join(map(str, params))}) is below the floor {cond}, where the row degenerates or coincides with another")
    return params


def model_for(family: str, params: Sequence[int] = ()) -> Model:
    fam = normalize_family(family)
    params = _check_params(fam, params)
    if fam == "sym2":
        return _pair_model(params[0], "sym2")
    if fam == "wedge2":
        return _pair_model(params[0], "wedge2")
    if fam == "standard-so":
        return _so_split(params[0] + 1)
    if fam == "tensor":
        return _tensor_model(*params)
    return _halfspin_model()


def reference_model(family: str, params: Sequence[int] = ()) -> Model:
    """A second faithful representation with the same Chevalley generators."""
    fam = normalize_family(family)
    params = _check_params(fam, params)
    if fam in ("sym2", "wedge2"):
        return _sl_standard(params[0])
    if fam == "tensor":
        return _direct_sum([_sl_standard(params[0]), _sl_standard(params[1])])
    if fam == "standard-so":
        base = _so_split(params[0] + 1)
        return Model(base.diagram, *(tuple(_on_pairs(x, "wedge2") for x in xs) for xs in (base.e, base.f, base.h)), ())
    return _so_split(10)


# --- the quintuple ---------------------------------------------------------

@dataclass(frozen=True)
class ConcreteQuintuple:
    family: str
    params: Tuple[int, ...]
    diagram: DynkinDiagram
    e: Tuple[SparseMatrix, ...]
    f: Tuple[SparseMatrix, ...]
    h: Tuple[SparseMatrix, ...]
    names: Tuple[str, ...]  # basis vectors, V0 first
    weights: Tuple[Tuple[int, ...], ...]
    grades: Tuple[int, ...]
    highest: Tuple[int, ...]
    alpha0_nodes: Tuple[int, ...]
    r: Fraction = Fraction(1)

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def N(self) -> int:
        return self.dim - 1

    @property
    def blocks(self) -> Tuple[int, int, int]:
        return tuple(self.grades.count(j) for j in range(3))  # type: ignore[return-value]

    def block_indices(self, j: int) -> List[int]:
        return [k for k, g in enumerate(self.grades) if g == j]

    @property
    def sigma_signs(self) -> Tuple[int, ...]:
        return tuple(1 if g == 0 else -1 for g in self.grades)

    @property
    def theta_signs(self) -> Tuple[int, ...]:
        return tuple(-1 if g == 1 else 1 for g in self.grades)

    @property
    def literal_theta_signs(self) -> Tuple[int, ...]:
        """+1 on V0 + V1, -1 on V2."""
        return tuple(-1 if g == 2 else 1 for g in self.grades)

    def generators(self) -> List[Tuple[str, SparseMatrix]]:
        out = []
        for i in range(self.diagram.rank):
            out += [(f"e{i + 1}", self.e[i]), (f"f{i + 1}", self.f[i]), (f"h{i + 1}", self.h[i])]
        return out

    def theta_parity(self, node: int) -> int:
        """theta-parity of the root vectors e_node, f_node."""
        return -1 if node in self.alpha0_nodes else 1

    @property
    def Z(self) -> SparseMatrix:
        return central_element(self.dim, self.r)

    def killing(self, x: SparseMatrix, y: SparseMatrix) -> Fraction:
        """Killing form of sl(N+1): 2(N+1) trace(xy)."""
        from .linalg import trace_product

        return 2 * self.dim * trace_product(x, y)


def central_element(dim: int, r=1) -> SparseMatrix:
    """Z with alpha_1(Z) = r and alpha_i(Z) = 0 otherwise, traceless, V0 first."""
    r = Fraction(r)
    return SparseMatrix.diagonal([r * Fraction(dim - 1, dim)] + [r * Fraction(-1, dim)] * (dim - 1))


def build_realization(family: str, params: Sequence[int] = (), r=1) -> ConcreteQuintuple:
    fam = normalize_family(family)
    params = _check_params(fam, params)
    model = model_for(fam, params)
    size = len(model.names)
    if any(not x.is_diagonal() for x in model.h):
        raise RealizationError("Cartan generators are not diagonal in the weight basis")
    weights = [tuple(int(x.entries.get((k, k), 0)) for x in model.h) for k in range(size)]
    killed = [k for k in range(size) if all(not any(c == k for (_, c) in x.entries) for x in model.e)]
    if len(killed) != 1:
        raise RealizationError(f"expected one highest weight vector, found {len(killed)}")
    top = killed[0]
    highest = weights[top]
    alpha0 = tuple(i + 1 for i, v in enumerate(highest) if v)
    grades = []
    for w in weights:
        depth = labels_to_roots(model.diagram, [a - b for a, b in zip(highest, w)])
        grades.append(int(sum(depth[i - 1] for i in alpha0)))
    if sorted(set(grades)) != [0, 1, 2] or grades.count(0) != 1:
        raise RealizationError(f"unexpected grades {sorted(set(grades))}")
    order = sorted(range(size), key=lambda k: (grades[k], k))
    return ConcreteQuintuple(
        family=fam,
        params=params,
        diagram=model.diagram,
        e=tuple(x.permuted(order) for x in model.e),
        f=tuple(x.permuted(order) for x in model.f),
        h=tuple(x.permuted(order) for x in model.h),
        names=tuple(model.names[k] for k in order),
        weights=tuple(weights[k] for k in order),
        grades=tuple(grades[k] for k in order),
        highest=highest,
        alpha0_nodes=alpha0,
        r=Fraction(r),
    )


# --- spans of matrix spaces --------------------------------------------------

Word = Tuple[str, ...]


def evaluate_word(gens: Dict[str, SparseMatrix], word: Word) -> SparseMatrix:
    """Right-nested bracket [w1, [w2, [..., wk]]]."""
    x = gens[word[-1]]
    for name in reversed(word[:-1]):
        x = bracket(gens[name], x)
    return x


@dataclass
class LieSpan:
    basis: List[SparseMatrix]
    words: List[Word]
    span: Span  # tracking span; insertion indices include rejected candidates

    def contains(self, x: SparseMatrix) -> bool:
        return self.span.contains(x.entries)

    def coordinates(self, x: SparseMatrix) -> Dict[int, Fraction]:
        """Coefficients over ``basis`` positions."""
        where = {ins: k for k, ins in enumerate(self.span.accepted)}
        return {where[i]: c for i, c in self.span.coordinates(x.entries).items()}

    def __len__(self) -> int:
        return len(self.basis)


def lie_closure(gens: Dict[str, SparseMatrix], max_dim: int = 10_000) -> LieSpan:
    """Basis of the Lie algebra generated by ``gens``, by right-nested words."""
    span = Span(track=True)
    basis: List[SparseMatrix] = []
    words: List[Word] = []

    def offer(x, w):
        if span.add(x.entries):
            basis.append(x)
            words.append(w)
            return True
        return False

    frontier = []
    for name in sorted(gens):
        if offer(gens[name], (name,)):
            frontier.append(len(basis) - 1)
    while frontier:
        nxt = []
        for k in frontier:
            for name in sorted(gens):
                if offer(bracket(gens[name], basis[k]), (name,) + words[k]):
                    nxt.append(len(basis) - 1)
                    if len(basis) > max_dim:
                        raise RealizationError("Lie closure exceeded the dimension bound")
        frontier = nxt
    return LieSpan(basis, words, span)


def span_of(mats: Sequence[SparseMatrix]) -> Tuple[Span, List[SparseMatrix]]:
    sp = Span()
    kept = []
    for m in mats:
        if sp.add(m.entries):
            kept.append(m)
    return sp, kept


def _mat_json(x: SparseMatrix) -> Dict[str, str]:
    return {f"{i},{j}": str(v) for (i, j), v in sorted(x.entries.items())}


# --- decomposition and lambda ----------------------------------------------

@dataclass
class Decomposition:
    algebra: LieSpan
    h_tilde: List[SparseMatrix]
    p_tilde: List[SparseMatrix]


def decompose(q: ConcreteQuintuple) -> Decomposition:
    gens = {name: x for name, x in q.generators()}
    alg = lie_closure(gens)
    t = q.theta_signs
    _, even = span_of([(x + x.conjugate_by_signs(t)).scale(Fraction(1, 2)) for x in alg.basis])
    _, odd = span_of([(x - x.conjugate_by_signs(t)).scale(Fraction(1, 2)) for x in alg.basis])
    return Decomposition(alg, even, odd)


@dataclass
class LambdaMap:
    """lambda on the unit basis of p_minus (Hom(V0,V1) then Hom(V1,V0))."""

    dim: int
    domain: List[Tuple[int, int]]
    images: List[SparseMatrix]

    def __post_init__(self):
        self._index = {k: i for i, k in enumerate(self.domain)}

    def domain_basis(self) -> List[SparseMatrix]:
        return [SparseMatrix.unit(self.dim, i, j) for i, j in self.domain]

    def __call__(self, x: SparseMatrix) -> SparseMatrix:
        out = SparseMatrix(self.dim)
        for key, v in x.entries.items():
            if key not in self._index:
                raise ValueError(f"entry {key} lies outside p_minus")
            out = out + self.images[self._index[key]].scale(v)
        return out

    def codomain(self, grades: Sequence[int]) -> List[Tuple[int, int]]:
        v1 = [k for k, g in enumerate(grades) if g == 1]
        v2 = [k for k, g in enumerate(grades) if g == 2]
        return [(i, j) for i in v1 for j in v2] + [(i, j) for i in v2 for j in v1]

    def matrix(self, grades: Sequence[int]) -> List[List[Fraction]]:
        """Columns are images of the domain basis in the unit basis of h_minus."""
        rows = self.codomain(grades)
        return [[img.entries.get(key, Fraction(0)) for img in self.images] for key in rows]

    def rank(self) -> int:
        return len(span_of([img for img in self.images if img])[1])

    def is_zero(self) -> bool:
        return not any(self.images)


def p_minus_keys(q: ConcreteQuintuple) -> List[Tuple[int, int]]:
    v1 = q.block_indices(1)
    return [(0, k) for k in v1] + [(k, 0) for k in v1]


def extract_lambda(q: ConcreteQuintuple, dec: Optional[Decomposition] = None) -> LambdaMap:
    dec = dec or decompose(q)
    keys = p_minus_keys(q)
    keyset = set(keys)
    g = q.grades
    span = Span(track=True)
    h_parts = []
    for y in dec.p_tilde:
        p_part = {k: v for k, v in y.entries.items() if k in keyset}
        rest = {k: v for k, v in y.entries.items() if k not in keyset}
        if any({g[i], g[j]} != {1, 2} for i, j in rest):
            raise RealizationError("theta-odd element has entries outside the V0<->V1 and V1<->V2 blocks")
        if not span.add(p_part):
            raise RealizationError("the p_minus projection of p~ is not injective")
        h_parts.append(SparseMatrix(q.dim, rest))
    if len(span) != len(keys):
        raise RealizationError(f"p~ has dimension {len(span)}, but p_minus has dimension {len(keys)}")
    images = []
    for key in keys:
        coords = span.coordinates({key: Fraction(1)})
        img = SparseMatrix(q.dim)
        for idx, c in coords.items():
            img = img + h_parts[idx].scale(c)
        images.append(img)
    return LambdaMap(q.dim, keys, images)


# --- checks ------------------------------------------------------------------

def bracket_closure_check(q: ConcreteQuintuple) -> CheckRecord:
    """Chevalley-Serre relations among the generator matrices."""
    a = cartan_matrix(q.diagram)
    n = q.diagram.rank
    zero = SparseMatrix(q.dim)
    for i in range(n):
        for j in range(n):
            tests = [
                (f"[h{i+1},h{j+1}] = 0", bracket(q.h[i], q.h[j]), zero),
                (f"[h{i+1},e{j+1}] = A e", bracket(q.h[i], q.e[j]), q.e[j].scale(a[i][j])),
                (f"[h{i+1},f{j+1}] = -A f", bracket(q.h[i], q.f[j]), q.f[j].scale(-a[i][j])),
                (f"[e{i+1},f{j+1}]", bracket(q.e[i], q.f[j]), q.h[i] if i == j else zero),
            ]
            if i != j:
                xe, xf = q.e[j], q.f[j]
                for _ in range(1 - a[i][j]):
                    xe, xf = bracket(q.e[i], xe), bracket(q.f[i], xf)
                tests += [(f"ad(e{i+1})^{1 - a[i][j]} e{j+1} = 0", xe, zero),
                          (f"ad(f{i+1})^{1 - a[i][j]} f{j+1} = 0", xf, zero)]
            for label, lhs, rhs in tests:
                if lhs != rhs:
                    return CheckRecord("bracket-closure", "fail", f"relation {label} fails",
                                       {"relation": label, "lhs": _mat_json(lhs), "rhs": _mat_json(rhs)})
    traceless = all(x.trace() == 0 for _, x in q.generators())
    return check("bracket-closure", traceless, f"Serre relations hold for rank {n}; generators traceless")


def _random_word(rng: random.Random, names: Sequence[str], max_len: int) -> Word:
    return tuple(rng.choice(names) for _ in range(rng.randint(1, max_len)))


def homomorphism_check(q: ConcreteQuintuple, samples: int = 200, seed: int = 0, max_len: int = 3) -> CheckRecord:
    """rho([a, b]) = [rho(a), rho(b)] on random generator words, with the
    linear relations of g~ read off a second faithful representation."""
    ref = reference_model(q.family, q.params)
    ref_gens = {}
    for i in range(ref.diagram.rank):
        ref_gens.update({f"e{i+1}": ref.e[i], f"f{i+1}": ref.f[i], f"h{i+1}": ref.h[i]})
    rho_gens = dict(q.generators())
    ref_alg = lie_closure(ref_gens)
    rho_basis = [evaluate_word(rho_gens, w) for w in ref_alg.words]
    rng = random.Random(seed)
    names = sorted(rho_gens)
    for k in range(samples):
        wa, wb = _random_word(rng, names, max_len), _random_word(rng, names, max_len)
        target = bracket(evaluate_word(ref_gens, wa), evaluate_word(ref_gens, wb))
        image = SparseMatrix(q.dim)
        for idx, c in ref_alg.coordinates(target).items():
            image = image + rho_basis[idx].scale(c)
        direct = bracket(evaluate_word(rho_gens, wa), evaluate_word(rho_gens, wb))
        if image != direct:
            return CheckRecord("homomorphism", "fail", f"sample {k}: words {wa}, {wb}",
                               {"a": list(wa), "b": list(wb), "lhs": _mat_json(image), "rhs": _mat_json(direct)})
    return CheckRecord("homomorphism", PASS, f"{samples} random word pairs, dim g~ = {len(ref_alg)}")


def theta_stability_check(q: ConcreteQuintuple, dec: Decomposition) -> List[CheckRecord]:
    out = []
    t, s, lit = q.theta_signs, q.sigma_signs, q.literal_theta_signs
    bad = [k for k, x in enumerate(dec.algebra.basis) if not dec.algebra.contains(x.conjugate_by_signs(t))]
    out.append(check("theta-stable", not bad, f"rho(g~) of dim {len(dec.algebra)} is theta-stable", {"basis_indices": bad}))
    bad_lit = [k for k, x in enumerate(dec.algebra.basis) if not dec.algebra.contains(x.conjugate_by_signs(lit))]
    out.append(CheckRecord(
        "theta-literal", FINDING,
        "Ad(I_{V0+V1,V2}) " + ("does not stabilize" if bad_lit else "stabilizes") + " rho(g~); "
        "the model uses Ad(I_{V0+V2,V1})",
        {"unstable_basis_indices": bad_lit[:10]}))
    bad_sigma = [k for k, x in enumerate(dec.algebra.basis) if not dec.algebra.contains(x.conjugate_by_signs(s))]
    out.append(CheckRecord(
        "sigma-stable", FINDING if bad_sigma else PASS,
        "rho(g~) is " + ("not sigma-stable, as expected when lambda is nonzero" if bad_sigma else "sigma-stable"),
        {"unstable_basis_indices": bad_sigma[:10]} if bad_sigma else None))
    return out


def lambda_checks(q: ConcreteQuintuple, lam: LambdaMap) -> List[CheckRecord]:
    d1 = q.blocks[1]
    return [
        check("lambda-domain", len(lam.domain) == 2 * d1, f"dim p_minus = {len(lam.domain)} = 2 d1"),
        check("lambda-nonzero", not lam.is_zero(), f"rank lambda = {lam.rank()}"),
    ]


def gauss_equation_check(q: ConcreteQuintuple, lam: LambdaMap) -> List[CheckRecord]:
    basis = lam.domain_basis()
    lx = lam.images
    m = len(basis)
    first = None
    for i in range(m):
        for j in range(i + 1, m):
            lhs, rhs = bracket(lx[i], basis[j]), bracket(lx[j], basis[i])
            if lhs != rhs:
                first = {"x": i, "y": j, "lhs": _mat_json(lhs), "rhs": _mat_json(rhs)}
                break
        if first:
            break
    out = [check("gauss-1", first is None, f"[lambda x, y] = [lambda y, x] on {m * (m - 1) // 2} pairs", first)]
    second = None
    count = 0
    for i in range(m):
        for j in range(m):
            w = bracket(basis[i], basis[j]) + bracket(lx[i], lx[j])
            if not w:
                count += m
                continue
            for k in range(m):
                count += 1
                inner = bracket(w, basis[k])
                try:
                    lhs = lam(inner)
                except ValueError as exc:
                    second = {"x": i, "y": j, "z": k, "error": str(exc)}
                    break
                rhs = bracket(w, lx[k])
                if lhs != rhs:
                    second = {"x": i, "y": j, "z": k, "lhs": _mat_json(lhs), "rhs": _mat_json(rhs)}
                    break
            if second:
                break
        if second:
            break
    out.append(check("gauss-2", second is None,
                     f"lambda([[x,y]+[lambda x,lambda y], z]) = [[x,y]+[lambda x,lambda y], lambda z] on {count} triples",
                     second))
    return out


def parity_check(q: ConcreteQuintuple, dec: Optional[Decomposition] = None) -> CheckRecord:
    """h~ preserves V+ = V0 + V2 and V- = V1; p~ exchanges them."""
    side = [-1 if g == 1 else 1 for g in q.grades]
    items = []
    for i in range(q.diagram.rank):
        par = q.theta_parity(i + 1)
        items += [(f"e{i+1}", q.e[i], par), (f"f{i+1}", q.f[i], par), (f"h{i+1}", q.h[i], 1)]
    if dec is not None:
        items += [(f"h~[{k}]", x, 1) for k, x in enumerate(dec.h_tilde)]
        items += [(f"p~[{k}]", x, -1) for k, x in enumerate(dec.p_tilde)]
    for name, x, par in items:
        for (i, j), v in x.entries.items():
            if side[i] * side[j] != par:
                return CheckRecord("parity", "fail", f"{name} has entry ({i},{j}) of the wrong parity",
                                   {"element": name, "entry": [i, j], "value": str(v)})
    return CheckRecord("parity", PASS, f"{len(items)} elements respect the V+/V- parity")


def closure_check(q: ConcreteQuintuple, dec: Decomposition) -> List[CheckRecord]:
    s = q.sigma_signs
    pt = dec.p_tilde
    brackets = [bracket(x, y) for x, y in combinations(pt, 2)]
    outside = next((k for k, b in enumerate(brackets) if b.conjugate_by_signs(s) != b), None)
    out = [check("[p~,p~] in h", outside is None, f"{len(brackets)} brackets are sigma-even", {"pair_index": outside})]
    hsp, hbasis = span_of(brackets)
    psp, _ = span_of(pt)
    bad = None
    for a, x in enumerate(hbasis):
        for b, y in enumerate(pt):
            if not psp.contains(bracket(x, y).entries):
                bad = {"h_index": a, "p_index": b}
                break
        if bad:
            break
    out.append(check("[[p~,p~],p~] in p~", bad is None, f"dim [p~,p~] = {len(hbasis)}, dim p~ = {len(pt)}", bad))
    ht_sp, _ = span_of(dec.h_tilde)
    same = len(hbasis) == len(dec.h_tilde) and all(ht_sp.contains(x.entries) for x in hbasis)
    out.append(check("[p~,p~] = h~", same, f"theta-even part of rho(g~) has dim {len(dec.h_tilde)}"))
    return out


def _h_generators(q: ConcreteQuintuple) -> List[SparseMatrix]:
    """Generators of h = s(gl(V0) + gl(V1 + V2))."""
    n = q.dim
    out = [SparseMatrix.unit(n, 0, 0) - SparseMatrix.unit(n, 1, 1)] if n > 1 else []
    for k in range(1, n - 1):
        out += [SparseMatrix.unit(n, k, k + 1), SparseMatrix.unit(n, k + 1, k),
                SparseMatrix.unit(n, k, k) - SparseMatrix.unit(n, k + 1, k + 1)]
    return out


def omega(q: ConcreteQuintuple, x: SparseMatrix, y: SparseMatrix, r=None) -> Fraction:
    """-B(Z, [x, y]) with B = 2(N+1) trace."""
    z = central_element(q.dim, q.r if r is None else r)
    zd = [z.entries.get((i, i), Fraction(0)) for i in range(q.dim)]
    total = Fraction(0)
    for (i, j), v in x.entries.items():
        w = y.entries.get((j, i))
        if w:
            total += v * w * (zd[i] - zd[j])
    return -2 * q.dim * total


def p_basis(q: ConcreteQuintuple) -> List[SparseMatrix]:
    n = q.dim
    return [SparseMatrix.unit(n, 0, k) for k in range(1, n)] + [SparseMatrix.unit(n, k, 0) for k in range(1, n)]


def omega_matrix(q: ConcreteQuintuple, basis: Sequence[SparseMatrix], r=None) -> List[List[Fraction]]:
    return [[omega(q, x, y, r) for y in basis] for x in basis]


def symplectic_form_check(q: ConcreteQuintuple, lam: Optional[LambdaMap] = None,
                          dec: Optional[Decomposition] = None) -> List[CheckRecord]:
    out = []
    n = q.dim
    z = q.Z
    zd = [z.entries.get((i, i), Fraction(0)) for i in range(n)]
    roots_ok = zd[0] - zd[1] == q.r and all(zd[i] == zd[i + 1] for i in range(1, n - 1)) and z.trace() == 0
    out.append(check("Z", roots_ok, f"alpha_i(Z) = r delta_i1 with r = {q.r}, trace 0"))
    hgens = _h_generators(q)
    out.append(check("Z central in h", all(not bracket(z, H) for H in hgens), f"{len(hgens)} generators of h"))
    pb = p_basis(q)
    M = omega_matrix(q, pb)
    skew = all(M[a][b] == -M[b][a] for a in range(len(pb)) for b in range(len(pb)))
    out.append(check("omega skew", skew, f"on p of dim {len(pb)}"))
    det = determinant(M)
    out.append(check("omega nondegenerate", det != 0, f"det = {det}"))
    gl_basis = [SparseMatrix.unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    gl_basis += [SparseMatrix.unit(n, i, i) - SparseMatrix.unit(n, i + 1, i + 1) for i in range(n - 1)]
    bad = next(((a, b) for a, H in enumerate(hgens) for b, X in enumerate(gl_basis) if omega(q, H, X)), None)
    out.append(check("omega(h, .) = 0", bad is None, f"{len(hgens)} x {len(gl_basis)} pairs", {"pair": bad}))
    brk = [[bracket(H, X) for X in pb] for H in hgens]
    bad = None
    for a in range(len(hgens)):
        for i in range(len(pb)):
            for j in range(i, len(pb)):
                if omega(q, brk[a][i], pb[j]) + omega(q, pb[i], brk[a][j]):
                    bad = {"h_gen": a, "x": i, "y": j}
                    break
            if bad:
                break
        if bad:
            break
    out.append(check("omega ad_h-invariant", bad is None, f"{len(hgens)} generators of h", bad))
    if lam is not None:
        dom = lam.domain_basis()
        graph = [x + y for x, y in zip(dom, lam.images)]
        Mt = omega_matrix(q, dom)
        Mg = omega_matrix(q, graph)
        out.append(check("omega~ nondegenerate", determinant(Mt) != 0, f"on p~ of dim {len(dom)}"))
        out.append(check("omega~ = omega on the graph", Mt == Mg,
                         "-B(Z,[X+lambda X, Y+lambda Y]) = omega(X, Y)"))
        if dec is not None:
            bad = None
            for a, H in enumerate(dec.h_tilde):
                for i, x in enumerate(graph):
                    hx = bracket(H, x)
                    for j, y in enumerate(graph):
                        if omega(q, hx, y) + omega(q, x, bracket(H, y)):
                            bad = {"h_tilde": a, "x": i, "y": j}
                            break
                    if bad:
                        break
                if bad:
                    break
            out.append(check("omega~ ad_h~-invariant", bad is None, f"{len(dec.h_tilde)} elements of h~", bad))
    return out


def common_csa_check(q: ConcreteQuintuple) -> CheckRecord:
    diag = all(x.is_diagonal() for x in q.h)
    fixed = all(x.conjugate_by_signs(q.sigma_signs) == x and x.conjugate_by_signs(q.theta_signs) == x for x in q.h)
    independent = len(span_of(q.h)[1]) == q.diagram.rank
    return check("common-csa", diag and fixed and independent and q.diagram.rank <= q.N,
                 f"rho(h_i) diagonal and fixed by sigma, theta; rank {q.diagram.rank} <= N = {q.N}")


def check_realization(q: ConcreteQuintuple, samples: int = 200) -> List[CheckRecord]:
    """Every check on one quintuple, in a fixed order."""
    tag = f"{q.family}{q.params if q.params else ''}"
    records = [bracket_closure_check(q), homomorphism_check(q, samples=samples)]
    dec = decompose(q)
    records += theta_stability_check(q, dec)
    try:
        lam = extract_lambda(q, dec)
    except RealizationError as exc:
        records.append(CheckRecord("lambda", "fail", str(exc)))
        lam = None
    if lam is not None:
        records += lambda_checks(q, lam)
        records += gauss_equation_check(q, lam)
    records.append(parity_check(q, dec))
    records += closure_check(q, dec)
    records += symplectic_form_check(q, lam, dec)
    records.append(common_csa_check(q))
    for rec in records:
        rec.id = f"{tag}:{rec.id}"
    return records


GAUSS_SUITE: Tuple[Tuple[str, Tuple[int, ...]], ...] = (
    ("sym2", (1,)), ("sym2", (2,)), ("sym2", (3,)),
    ("wedge2", (4,)), ("wedge2", (5,)),
    ("standard-so", (4,)), ("standard-so", (5,)), ("standard-so", (6,)),
    ("tensor", (1, 1)), ("tensor", (1, 2)), ("tensor", (2, 2)),
    ("halfspin-D5", ()),
)
