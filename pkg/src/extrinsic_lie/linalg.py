"""Exact rational linear algebra.

Dense helpers work on lists of lists of ``Fraction``; :class:`SparseMatrix`
holds the matrices of the realizations, and :class:`Span` does incremental
row reduction for subspace membership and coordinate solving.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Matrix = List[List[Fraction]]


def to_fraction_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError("shape mismatch in mat_mul")
    cols = list(zip(*b)) if b else []
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def mat_vec(a: Sequence[Sequence], v: Sequence) -> List[Fraction]:
    return [sum((Fraction(x) * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]


def rref(rows: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = to_fraction_matrix(rows)
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def determinant(a: Sequence[Sequence]) -> Fraction:
    m = to_fraction_matrix(a)
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        p = m[c][c]
        det *= p
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / p
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(to_fraction_matrix(a), identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def solve(a: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    """Unique solution of ``a x = b``; raises if singular or inconsistent."""
    n_cols = len(a[0])
    aug = [list(row) + [Fraction(v)] for row, v in zip(a, b)]
    red, pivots = rref(aug)
    if n_cols in pivots:
        raise ValueError("inconsistent system")
    if len(pivots) != n_cols:
        raise ValueError("system is underdetermined")
    return [red[i][n_cols] for i in range(n_cols)]


class SparseMatrix:
    """Square exact matrix stored as ``{(row, col): Fraction}`` without zeros."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Optional[Dict[Tuple[int, int], Fraction]] = None):
        self.n = n
        self.entries: Dict[Tuple[int, int], Fraction] = {}
        if entries:
            for k, v in entries.items():
                if v:
                    self.entries[k] = Fraction(v)

    @classmethod
    def unit(cls, n: int, i: int, j: int, value=1) -> "SparseMatrix":
        return cls(n, {(i, j): Fraction(value)})

    @classmethod
    def diagonal(cls, values: Sequence) -> "SparseMatrix":
        return cls(len(values), {(i, i): Fraction(v) for i, v in enumerate(values)})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        return cls(len(rows), {(i, j): Fraction(v) for i, row in enumerate(rows) for j, v in enumerate(row) if v})

    def to_dense(self) -> Matrix:
        out = [[Fraction(0)] * self.n for _ in range(self.n)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SparseMatrix(self.n, out)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.n, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, c) -> "SparseMatrix":
        c = Fraction(c)
        if c == 0:
            return SparseMatrix(self.n)
        return SparseMatrix(self.n, {k: c * v for k, v in self.entries.items()})

    def __rmul__(self, c) -> "SparseMatrix":
        return self.scale(c)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: Dict[Tuple[int, int], Fraction] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return SparseMatrix(self.n, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, SparseMatrix) and self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __repr__(self) -> str:
        return f"SparseMatrix({self.n}, {dict(sorted(self.entries.items()))})"

    def trace(self) -> Fraction:
        return sum((v for (i, j), v in self.entries.items() if i == j), Fraction(0))

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.n, {(j, i): v for (i, j), v in self.entries.items()})

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self.entries)

    def conjugate_by_signs(self, signs: Sequence[int]) -> "SparseMatrix":
        """``D X D`` for the diagonal sign matrix ``D`` (an involution's action)."""
        return SparseMatrix(self.n, {(i, j): v * signs[i] * signs[j] for (i, j), v in self.entries.items()})

    def permuted(self, order: Sequence[int]) -> "SparseMatrix":
        """Re-express in the basis ``order`` (new index k is old index order[k])."""
        pos = {old: new for new, old in enumerate(order)}
        return SparseMatrix(self.n, {(pos[i], pos[j]): v for (i, j), v in self.entries.items()})

    def restrict_blocks(self, rows: set, cols: set) -> "SparseMatrix":
        return SparseMatrix(self.n, {(i, j): v for (i, j), v in self.entries.items() if i in rows and j in cols})


def bracket(x: SparseMatrix, y: SparseMatrix) -> SparseMatrix:
    return x @ y - y @ x


def trace_product(x: SparseMatrix, y: SparseMatrix) -> Fraction:
    return sum((v * y.entries.get((j, i), 0) for (i, j), v in x.entries.items()), Fraction(0))


Vector = Dict[Hashable, Fraction]


class Span:
    """Incrementally row-reduced span of sparse vectors.

    Each stored row has a pivot key with coefficient 1 and no other stored
    row carries that key. When ``track`` is set, rows remember which inserted
    vectors (by insertion index) combine to them, so coordinates relative to
    the independent inserted vectors can be recovered.
    """

    def __init__(self, track: bool = False):
        self.rows: List[Tuple[Hashable, Vector, Vector]] = []
        self.track = track
        self._count = 0
        self.accepted: List[int] = []

    def __len__(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: Vector) -> Tuple[Vector, Vector]:
        v = {k: Fraction(x) for k, x in vec.items() if x}
        combo: Vector = {}
        for pivot, row, rcombo in self.rows:
            c = v.get(pivot)
            if not c:
                continue
            for k, x in row.items():
                s = v.get(k, 0) - c * x
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
            if self.track:
                for k, x in rcombo.items():
                    s = combo.get(k, 0) - c * x
                    if s:
                        combo[k] = s
                    else:
                        combo.pop(k, None)
        return v, combo

    def contains(self, vec: Vector) -> bool:
        return not self._reduce(vec)[0]

    def add(self, vec: Vector) -> bool:
        """Insert ``vec``; returns True if it enlarged the span."""
        idx = self._count
        self._count += 1
        v, combo = self._reduce(vec)
        if not v:
            return False
        pivot = min(v, key=_sort_key)
        p = v[pivot]
        v = {k: x / p for k, x in v.items()}
        if self.track:
            combo[idx] = combo.get(idx, 0) + 1
            combo = {k: x / p for k, x in combo.items() if x}
        for n, (piv, row, rcombo) in enumerate(self.rows):
            c = row.get(pivot)
            if not c:
                continue
            for k, x in v.items():
                s = row.get(k, 0) - c * x
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
            if self.track:
                for k, x in combo.items():
                    s = rcombo.get(k, 0) - c * x
                    if s:
                        rcombo[k] = s
                    else:
                        rcombo.pop(k, None)
        self.rows.append((pivot, v, combo))
        self.accepted.append(idx)
        return True

    def coordinates(self, vec: Vector) -> Vector:
        """Coefficients over inserted vectors (insertion index) reproducing ``vec``.

        Raises ``ValueError`` when ``vec`` is outside the span.
        """
        if not self.track:
            raise RuntimeError("coordinates need a tracking span")
        v = {k: Fraction(x) for k, x in vec.items() if x}
        out: Vector = {}
        for pivot, row, rcombo in self.rows:
            c = v.get(pivot)
            if not c:
                continue
            for k, x in row.items():
                s = v.get(k, 0) - c * x
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
            for k, x in rcombo.items():
                s = out.get(k, 0) + c * x
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        if v:
            raise ValueError("vector is not in the span")
        return out


def _sort_key(k):
    return k if isinstance(k, tuple) else (k,)
