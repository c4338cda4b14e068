"""Exact rational linear algebra: matrices, row reduction and subspaces.

Everything here works over :class:`fractions.Fraction`; there is no
floating point anywhere.  Matrices and subspaces are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def to_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``-p/q`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not _RATIONAL_RE.match(s):
            raise ValueError(f"not a rational literal: {x!r}")
        value = Fraction(s)
        return value
    raise TypeError(f"cannot convert {type(x).__name__} to a rational exactly")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return not any(v)


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


class QMatrix:
    """Dense immutable matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(vec(r) for r in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix rows")
        self._data = rows
        self.rows = len(rows)
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        one, zero = Fraction(1), Fraction(0)
        return cls(([one if i == j else zero for j in range(n)] for i in range(n)), n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QMatrix:
        return cls(([Fraction(0)] * cols for _ in range(rows)), cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> QMatrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls(([columns[j][i] for j in range(len(columns))] for i in range(rows)), len(columns))

    def row(self, i: int) -> Vector:
        return self._data[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._data)

    def to_rows(self) -> tuple:
        return self._data

    @property
    def entries(self) -> Vector:
        return tuple(x for r in self._data for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def __hash__(self):
        return hash((self.cols, self._data))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._data)
        return f"QMatrix([{body}])"

    def __add__(self, other: QMatrix) -> QMatrix:
        self._check_same_shape(other)
        return QMatrix(([a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)), self.cols)

    def __sub__(self, other: QMatrix) -> QMatrix:
        self._check_same_shape(other)
        return QMatrix(([a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)), self.cols)

    def __neg__(self) -> QMatrix:
        return QMatrix(([-a for a in r] for r in self._data), self.cols)

    def scale(self, c) -> QMatrix:
        c = to_rational(c)
        return QMatrix(([c * a for a in r] for r in self._data), self.cols)

    def __matmul__(self, other: QMatrix) -> QMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        other_cols = [other.column(j) for j in range(other.cols)]
        return QMatrix(([dot(r, c) for c in other_cols] for r in self._data), other.cols)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for matrix with {self.cols} columns")
        return tuple(dot(r, v) for r in self._data)

    def transpose(self) -> QMatrix:
        return QMatrix.from_columns(self._data, self.cols)

    def trace(self) -> Fraction:
        return sum((self._data[i][i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _check_same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")


def _rref_rows(rows: list[list[Fraction]], ncols: int):
    """In-place Gauss-Jordan on a list of row lists; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pivot_row = rows[r]
        inv = 1 / pivot_row[c]
        if inv != 1:
            pivot_row[:] = [x * inv for x in pivot_row]
        for i in range(nrows):
            if i != r:
                factor = rows[i][c]
                if factor:
                    row_i = rows[i]
                    for k in range(c, ncols):
                        if pivot_row[k]:
                            row_i[k] -= factor * pivot_row[k]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: QMatrix) -> tuple[QMatrix, int, tuple[int, ...]]:
    """Reduced row-echelon form, rank and pivot columns.

    Zero rows are kept at the bottom so the result has the shape of ``m``.
    """
    rows = [list(r) for r in m.to_rows()]
    pivots = _rref_rows(rows, m.cols)
    return QMatrix(rows, m.cols), len(pivots), tuple(pivots)


def kernel(m: QMatrix) -> Subspace:
    """The null space {x : m x = 0}."""
    reduced, rank, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -reduced[i, f]
        basis.append(x)
    return Subspace.span(basis, m.cols)


def solve_linear(m: QMatrix, rhs: Sequence) -> Vector | None:
    """One solution of ``m x = rhs`` with all free variables set to 0, or None."""
    rhs = vec(rhs)
    if len(rhs) != m.rows:
        raise DimensionMismatch(f"rhs of length {len(rhs)} for {m.rows} equations")
    rows = [list(r) + [b] for r, b in zip(m.to_rows(), rhs)]
    pivots = _rref_rows(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        x[p] = rows[i][m.cols]
    x = tuple(x)
    if m.apply(x) != rhs:
        raise AssertionError("solve_linear produced a non-solution")
    return x


def inverse(m: QMatrix) -> QMatrix | None:
    """Inverse of a square matrix, or None if it is singular."""
    if not m.is_square():
        raise DimensionMismatch("only square matrices have inverses")
    n = m.rows
    rows = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.to_rows())]
    pivots = _rref_rows(rows, 2 * n)
    if tuple(pivots[:n]) != tuple(range(n)):
        return None
    inv = QMatrix([r[n:] for r in rows], n)
    if m @ inv != QMatrix.identity(n):
        raise AssertionError("matrix inverse failed verification")
    return inv


def rank(m: QMatrix) -> int:
    return rref(m)[1]


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n stored as its canonical RREF basis (no zero rows).

    Two subspaces are equal iff their ``basis`` tuples are equal.
    """

    ambient_dim: int
    basis: tuple  # tuple of row vectors in RREF
    pivots: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
        rows = []
        for v in vectors:
            v = list(vec(v))
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
            if any(v):
                rows.append(v)
        pivots = _rref_rows(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in rows[: len(pivots)]), tuple(pivots))

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, (), ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, QMatrix.identity(n).to_rows(), tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> QMatrix:
        return QMatrix(self.basis, self.ambient_dim)

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after clearing every pivot column."""
        v = list(vec(v))
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for k in range(p, self.ambient_dim):
                    if row[k]:
                        v[k] -= c * row[k]
        return tuple(v)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence) -> Vector | None:
        """Coefficients of ``v`` in the stored basis, or None if outside."""
        if not self.contains(v):
            return None
        v = vec(v)
        return tuple(v[p] for p in self.pivots)

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(r) for r in other.basis)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __repr__(self):
        rows = "; ".join(",".join(format_rational(x) for x in r) for r in self.basis)
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim}: [{rows}])"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("subspaces live in different ambient spaces")
    return Subspace.span(a.basis + b.basis, a.ambient_dim)


def subspace_contains(a: Subspace, v: Sequence) -> bool:
    return a.contains(v)


def first_dependency(vectors: Iterable[Sequence]) -> tuple[int, Vector] | None:
    """Find the first vector that depends linearly on its predecessors.

    Consumes ``vectors`` lazily.  Returns ``(d, c)`` where ``v_d = sum c_i v_i``
    over i < d, or None if the iterable is exhausted first.  This is the
    Krylov step behind every minimal-polynomial computation.
    """
    echelon = []  # (pivot, row, combination expressing row in terms of v_0..)
    for d, v in enumerate(vectors):
        row = list(vec(v))
        combo = [Fraction(0)] * d + [Fraction(1)]
        for pivot, erow, ecombo in echelon:
            c = row[pivot]
            if c:
                for k, x in enumerate(erow):
                    if x:
                        row[k] -= c * x
                for k, x in enumerate(ecombo):
                    if x:
                        combo[k] -= c * x
        pivot = next((k for k, x in enumerate(row) if x), None)
        if pivot is None:
            # 0 = combo . (v_0..v_d) with combo[d] = 1
            return d, tuple(-combo[k] for k in range(d))
        inv = 1 / row[pivot]
        # later rows vanish on earlier pivots, so reducing in insertion order suffices
        echelon.append((pivot, [x * inv for x in row], [x * inv for x in combo]))
    return None
