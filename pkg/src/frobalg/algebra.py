"""Finite-dimensional unital associative algebras given by structure constants.

An :class:`AlgebraPresentation` stores ``mult[i][j][k]``, the coefficient of
``e_k`` in ``e_i * e_j``, together with the coordinates of the unit.
Validation is exhaustive: every basis triple is checked for associativity,
which costs O(n^3) triples each with O(n^2) sparse work, so it is meant for
desk-scale algebras (n up to about 64).
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AlgebraMismatch, DimensionMismatch, InvalidAlgebra, NotAnIdeal
from .exact import (
    QMatrix,
    Subspace,
    first_dependency,
    format_rational,
    inverse,
    solve_linear,
    to_rational,
    vec,
    zero_vector,
)
from .poly import Poly


class AlgebraPresentation:
    """Structure-constant presentation; immutable after construction."""

    def __init__(self, name: str, basis_names: Sequence[str], unit: Sequence, mult: Sequence):
        self.name = name
        self.basis_names = tuple(basis_names)
        self.dim = len(self.basis_names)
        self.unit = vec(unit)
        self.mult = tuple(tuple(vec(cell) for cell in row) for row in mult)
        n = self.dim
        if n < 1:
            raise DimensionMismatch("an algebra needs at least one basis element")
        shape_ok = (
            len(self.unit) == n
            and len(self.mult) == n
            and all(len(row) == n and all(len(cell) == n for cell in row) for row in self.mult)
        )
        if not shape_ok:
            raise DimensionMismatch(f"structure constants do not have shape {n}x{n}x{n}")
        # sparse view of the table: table[i][j] = ((k, c), ...) with c != 0
        self._table = tuple(
            tuple(tuple((k, c) for k, c in enumerate(cell) if c) for cell in row) for row in self.mult
        )

    def __repr__(self):
        return f"AlgebraPresentation({self.name!r}, dim={self.dim})"

    def same_constants(self, other: AlgebraPresentation) -> bool:
        return (
            self.basis_names == other.basis_names
            and self.unit == other.unit
            and self.mult == other.mult
        )

    # -- elements -----------------------------------------------------------------

    def element(self, coords: Iterable) -> Element:
        return Element(self, vec(coords))

    def basis_element(self, i: int) -> Element:
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return Element(self, tuple(coords))

    def basis(self) -> list[Element]:
        return [self.basis_element(i) for i in range(self.dim)]

    def by_name(self, name: str) -> Element:
        return self.basis_element(self.basis_names.index(name))

    def one(self) -> Element:
        return Element(self, self.unit)

    def zero(self) -> Element:
        return Element(self, zero_vector(self.dim))

    def scalar(self, c) -> Element:
        c = to_rational(c)
        return Element(self, tuple(c * u for u in self.unit))

    def mul_coords(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple:
        out = [Fraction(0)] * self.dim
        table = self._table
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = table[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                c = ai * bj
                for k, m in row[j]:
                    out[k] += c * m
        return tuple(out)

    def trace_form_weights(self) -> tuple:
        """``trace(L_{e_k})`` for every basis element ``e_k``."""
        return tuple(
            sum((self.mult[k][m][m] for m in range(self.dim)), Fraction(0)) for k in range(self.dim)
        )

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": list(self.basis_names),
            "unit": [format_rational(x) for x in self.unit],
            "mult": [[[format_rational(x) for x in cell] for cell in row] for row in self.mult],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=1) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.dumps().encode()).hexdigest()


def algebra_from_json_dict(data: dict) -> AlgebraPresentation:
    """Parse the algebra file format; raises ValueError on malformed input."""
    if not isinstance(data, dict):
        raise ValueError("algebra file must contain a JSON object")
    missing = {"name", "dim", "basis", "unit", "mult"} - set(data)
    if missing:
        raise ValueError(f"algebra file lacks keys {sorted(missing)}")
    n = data["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("dim must be a positive integer")
    basis = data["basis"]
    if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) for b in basis):
        raise ValueError("basis must list dim strings")

    def rational(s):
        if not isinstance(s, str):
            raise ValueError(f"rationals are written as strings, got {s!r}")
        x = to_rational(s)
        if format_rational(x) != s:
            raise ValueError(f"rational {s!r} is not in reduced form")
        return x

    unit = data["unit"]
    mult = data["mult"]
    if not isinstance(unit, list) or not isinstance(mult, list):
        raise ValueError("unit and mult must be arrays")
    try:
        unit_v = [rational(s) for s in unit]
        mult_v = [[[rational(s) for s in cell] for cell in row] for row in mult]
    except TypeError as exc:
        raise ValueError(f"malformed structure constants: {exc}") from None
    return AlgebraPresentation(data["name"], basis, unit_v, mult_v)


def load_algebra(path) -> AlgebraPresentation:
    with open(path) as fh:
        return algebra_from_json_dict(json.load(fh))


def loads_algebra(text: str) -> AlgebraPresentation:
    return algebra_from_json_dict(json.loads(text))


# -- validation -------------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    kind: str | None = None  # AssociativityError | UnitError | ShapeError
    triple: tuple | None = None
    lhs: tuple | None = None
    rhs: tuple | None = None
    message: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "ok" if self.ok else f"{self.kind}: {self.message}"


def _integer_table(A: AlgebraPresentation):
    # scaling every constant by a common denominator D scales both sides of
    # each associativity triple by D^2, so integers decide it exactly
    D = 1
    for row in A._table:
        for cell in row:
            for _, c in cell:
                D = math.lcm(D, c.denominator)
    return [[[(k, int(c * D)) for k, c in cell] for cell in row] for row in A._table]


def _sparse_combine(terms, table, fixed: int, left: bool) -> dict:
    out: dict = {}
    for l, c in terms:
        for k, m in (table[l][fixed] if left else table[fixed][l]):
            out[k] = out.get(k, 0) + c * m
    return {k: v for k, v in out.items() if v}


def validate(A: AlgebraPresentation) -> ValidationReport:
    """Check the unit law and associativity on every basis triple."""
    n = A.dim
    basis = [A.basis_element(i).coords for i in range(n)]
    for i, e in enumerate(basis):
        left = A.mul_coords(A.unit, e)
        right = A.mul_coords(e, A.unit)
        if left != e or right != e:
            bad = left if left != e else right
            side = "1*e" if left != e else "e*1"
            return ValidationReport(
                False,
                "UnitError",
                (i,),
                bad,
                e,
                f"{side} != e for basis element {A.basis_names[i]}",
            )
    table = _integer_table(A)
    for i in range(n):
        for j in range(n):
            eij = table[i][j]
            for k in range(n):
                # (e_i e_j) e_k and e_i (e_j e_k), accumulated sparsely
                if _sparse_combine(eij, table, k, left=True) == _sparse_combine(table[j][k], table, i, left=False):
                    continue
                lhs = A.mul_coords(A.mul_coords(basis[i], basis[j]), basis[k])
                rhs = A.mul_coords(basis[i], A.mul_coords(basis[j], basis[k]))
                if lhs != rhs:
                    names = A.basis_names
                    return ValidationReport(
                        False,
                        "AssociativityError",
                        (i, j, k),
                        lhs,
                        rhs,
                        f"({names[i]}*{names[j]})*{names[k]} != {names[i]}*({names[j]}*{names[k]})",
                    )
    return ValidationReport(True)


def require_valid(A: AlgebraPresentation) -> AlgebraPresentation:
    report = validate(A)
    if not report:
        raise InvalidAlgebra(report)
    return A


# -- elements ---------------------------------------------------------------------


class Element:
    """An algebra element as a coordinate vector in the presentation's basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: AlgebraPresentation, coords: tuple):
        if len(coords) != algebra.dim:
            raise DimensionMismatch(f"{len(coords)} coordinates for a {algebra.dim}-dimensional algebra")
        self.algebra = algebra
        self.coords = coords

    def _check(self, other: Element):
        if not isinstance(other, Element):
            raise TypeError(f"expected an Element, got {type(other).__name__}")
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")

    def _coerce(self, other) -> Element:
        if isinstance(other, (int, Fraction)):
            return self.algebra.scalar(other)
        self._check(other)
        return other

    def __add__(self, other) -> Element:
        other = self._coerce(other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other) -> Element:
        other = self._coerce(other)
        return Element(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other) -> Element:
        return self._coerce(other) - self

    def __neg__(self) -> Element:
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other) -> Element:
        if isinstance(other, (int, Fraction)):
            c = to_rational(other)
            return Element(self.algebra, tuple(c * a for a in self.coords))
        self._check(other)
        return Element(self.algebra, self.algebra.mul_coords(self.coords, other.coords))

    def __rmul__(self, other) -> Element:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, c) -> Element:
        return self * (1 / to_rational(c))

    def __pow__(self, n: int) -> Element:
        if n < 0:
            inv = invert(self)
            if inv is None:
                raise ZeroDivisionError("element is not invertible")
            return inv ** (-n)
        result, base = self.algebra.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return other.algebra is self.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def circ(self, other: Element) -> Element:
        """The anticommutator ``ab + ba``."""
        return self * other + other * self

    def scalar_value(self) -> Fraction | None:
        """``c`` if this element equals ``c * 1``, else None."""
        unit = self.algebra.unit
        p = next(i for i, u in enumerate(unit) if u)
        c = self.coords[p] / unit[p]
        if all(x == c * u for x, u in zip(self.coords, unit)):
            return c
        return None

    def format(self) -> str:
        terms = []
        for c, name in zip(self.coords, self.algebra.basis_names):
            if c:
                terms.append(f"{format_rational(c)}*{name}")
        return " + ".join(terms) if terms else "0"

    def coords_str(self) -> list[str]:
        return [format_rational(c) for c in self.coords]

    def __repr__(self):
        return f"Element({self.format()})"


def mul(a: Element, b: Element) -> Element:
    return a * b


def anticommutator(a: Element, b: Element) -> Element:
    return a.circ(b)


def power(a: Element, n: int) -> Element:
    return a ** n


def regular_representation(a: Element) -> tuple[QMatrix, QMatrix]:
    """Matrices of ``x -> a x`` and ``x -> x a`` acting on coordinate columns."""
    A = a.algebra
    cols_l = [A.mul_coords(a.coords, e.coords) for e in A.basis()]
    cols_r = [A.mul_coords(e.coords, a.coords) for e in A.basis()]
    return QMatrix.from_columns(cols_l, A.dim), QMatrix.from_columns(cols_r, A.dim)


def left_mult_matrix(a: Element) -> QMatrix:
    A = a.algebra
    return QMatrix.from_columns([A.mul_coords(a.coords, e.coords) for e in A.basis()], A.dim)


def invert(a: Element) -> Element | None:
    """Two-sided inverse of ``a`` or None."""
    A = a.algebra
    x = solve_linear(left_mult_matrix(a), A.unit)
    if x is None:
        return None
    inv = Element(A, x)
    one = A.one()
    if a * inv != one or inv * a != one:
        return None
    return inv


def is_invertible(a: Element) -> bool:
    return invert(a) is not None


def minimal_poly_of_element(a: Element) -> Poly:
    """Monic minimal polynomial from the powers of ``a`` in the algebra itself."""

    def powers():
        p = a.algebra.one()
        while True:
            yield p.coords
            p = p * a

    d, combo = first_dependency(powers())
    mu = Poly(tuple(-c for c in combo) + (Fraction(1),))
    if not eval_poly_at_element(mu, a).is_zero():
        raise AssertionError("minimal polynomial does not annihilate the element")
    return mu


def eval_poly_at_element(f: Poly, a: Element) -> Element:
    """Horner evaluation; the constant term multiplies the unit."""
    A = a.algebra
    acc = A.zero()
    for c in reversed(f.coeffs):
        acc = acc * a
        if c:
            acc = acc + A.scalar(c)
    return acc


# -- ideals -------------------------------------------------------------------------


def span_of(A: AlgebraPresentation, elements: Iterable[Element]) -> Subspace:
    return Subspace.span((e.coords for e in elements), A.dim)


def is_left_closed(A: AlgebraPresentation, S: Subspace) -> bool:
    return all(S.contains(A.mul_coords(e.coords, v)) for e in A.basis() for v in S.basis)


def is_right_closed(A: AlgebraPresentation, S: Subspace) -> bool:
    return all(S.contains(A.mul_coords(v, e.coords)) for e in A.basis() for v in S.basis)


def is_two_sided_ideal(A: AlgebraPresentation, S: Subspace) -> bool:
    return S.ambient_dim == A.dim and is_left_closed(A, S) and is_right_closed(A, S)


def left_ideal_span(A: AlgebraPresentation, gens: Iterable[Element]) -> Subspace:
    """``span{a g}``: the left ideal generated by ``gens``."""
    basis = A.basis()
    S = Subspace.span((A.mul_coords(e.coords, g.coords) for g in gens for e in basis), A.dim)
    if not is_left_closed(A, S):
        raise AssertionError("left ideal span is not closed under left multiplication")
    return S


def two_sided_ideal_span(A: AlgebraPresentation, gens: Iterable[Element]) -> Subspace:
    """Closure of ``span(gens)`` under left and right multiplication."""
    S = span_of(A, gens)
    basis = [e.coords for e in A.basis()]
    while True:
        new = list(S.basis)
        for v in S.basis:
            for e in basis:
                new.append(A.mul_coords(e, v))
                new.append(A.mul_coords(v, e))
        T = Subspace.span(new, A.dim)
        if T == S:
            return S
        S = T


def subspace_product(A: AlgebraPresentation, S: Subspace, T: Subspace) -> Subspace:
    """``span{s t}`` for s in S, t in T."""
    return Subspace.span((A.mul_coords(s, t) for s in S.basis for t in T.basis), A.dim)


@dataclass(frozen=True, eq=False)
class Projection:
    """The quotient map ``A -> A/I`` in coordinates."""

    source: AlgebraPresentation
    target: AlgebraPresentation
    ideal: Subspace
    kept: tuple  # basis indices of the source whose images form the quotient basis

    def coords(self, v: Sequence) -> tuple:
        r = self.ideal.reduce(v)
        return tuple(r[k] for k in self.kept)

    def __call__(self, a: Element) -> Element:
        return Element(self.target, self.coords(a.coords))

    def section(self, b: Element) -> Element:
        """Linear lift placing quotient coordinates on the kept basis vectors."""
        coords = [Fraction(0)] * self.source.dim
        for k, c in zip(self.kept, b.coords):
            coords[k] = c
        return Element(self.source, tuple(coords))

    def matrix(self) -> QMatrix:
        return QMatrix.from_columns([self.coords(e.coords) for e in self.source.basis()], len(self.kept))


def quotient(A: AlgebraPresentation, I: Subspace, name: str | None = None):
    """``(A/I, projection)``; the quotient basis is the image of the non-pivot basis vectors."""
    if I.ambient_dim != A.dim or not is_two_sided_ideal(A, I):
        raise NotAnIdeal("quotient needs a two-sided ideal")
    pivots = set(I.pivots)
    kept = tuple(k for k in range(A.dim) if k not in pivots)
    if not kept:
        raise NotAnIdeal("the ideal is the whole algebra")

    def proj(v):
        r = I.reduce(v)
        return tuple(r[k] for k in kept)

    basis = [A.basis_element(k).coords for k in kept]
    mult = [[proj(A.mul_coords(a, b)) for b in basis] for a in basis]
    Q = AlgebraPresentation(
        name or f"{A.name}/I",
        [A.basis_names[k] for k in kept],
        proj(A.unit),
        mult,
    )
    pi = Projection(A, Q, I, kept)
    # unital homomorphism on all basis pairs
    if pi(A.one()) != Q.one():
        raise AssertionError("projection is not unital")
    for a in A.basis():
        for b in A.basis():
            if pi(a * b) != pi(a) * pi(b):
                raise AssertionError("projection is not multiplicative")
    return Q, pi


# -- constructions ------------------------------------------------------------------


def direct_product(A: AlgebraPresentation, B: AlgebraPresentation, name: str | None = None):
    n, m = A.dim, B.dim
    names = [f"({a},0)" for a in A.basis_names] + [f"(0,{b})" for b in B.basis_names]
    zero = Fraction(0)
    mult = [[[zero] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            mult[i][j][:n] = A.mult[i][j]
    for i in range(m):
        for j in range(m):
            mult[n + i][n + j][n:] = B.mult[i][j]
    return AlgebraPresentation(name or f"{A.name}x{B.name}", names, A.unit + B.unit, mult)


def tensor_product(A: AlgebraPresentation, B: AlgebraPresentation, name: str | None = None):
    """``A (x) B`` with basis ``a_i (x) b_j`` at index ``i * dim B + j``."""
    n, m = A.dim, B.dim
    names = [b if a == "1" else a if b == "1" else f"{a}*{b}" for a in A.basis_names for b in B.basis_names]
    if len(set(names)) != len(names):
        names = [f"{a}*{b}" for a in A.basis_names for b in B.basis_names]
    dim = n * m
    unit = [A.unit[i] * B.unit[j] for i in range(n) for j in range(m)]
    mult = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i1, row in enumerate(A._table):
        for i2, cell_a in enumerate(row):
            if not cell_a:
                continue
            for j1, brow in enumerate(B._table):
                for j2, cell_b in enumerate(brow):
                    out = mult[i1 * m + j1][i2 * m + j2]
                    for k1, ca in cell_a:
                        for k2, cb in cell_b:
                            out[k1 * m + k2] += ca * cb
    return AlgebraPresentation(name or f"{A.name}(x){B.name}", names, unit, mult)


def _matrix_units_algebra(B: AlgebraPresentation, n: int, positions, name: str, suffix_names=True):
    index = {pos: k for k, pos in enumerate(positions)}
    m = B.dim
    dim = len(positions) * m
    names = []
    for r, s in positions:
        for b in B.basis_names:
            unit_name = f"e{r + 1}{s + 1}" if n < 10 else f"e{r + 1}_{s + 1}"
            names.append(unit_name if (m == 1 and b == "1") else f"{unit_name}*{b}")
    mult = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for (r, s), p in index.items():
        for (t, u), q in index.items():
            if s != t:
                continue
            target = index[(r, u)]
            for i, row in enumerate(B._table):
                for j, cell in enumerate(row):
                    out = mult[p * m + i][q * m + j]
                    for k, c in cell:
                        out[target * m + k] += c
    unit = [Fraction(0)] * dim
    for d in range(n):
        p = index[(d, d)]
        for k in range(m):
            unit[p * m + k] = B.unit[k]
    return AlgebraPresentation(name, names, unit, mult)


def matrix_algebra(B: AlgebraPresentation, n: int, name: str | None = None):
    """``M_n(B)``; basis ``e_rs (x) b`` in row-major order of (r, s), then b."""
    if n < 1:
        raise ValueError("matrix size must be positive")
    positions = [(r, s) for r in range(n) for s in range(n)]
    return _matrix_units_algebra(B, n, positions, name or f"M{n}({B.name})")


def triangular_algebra(B: AlgebraPresentation, n: int, name: str | None = None):
    """Upper-triangular ``n x n`` matrices over ``B``."""
    if n < 1:
        raise ValueError("matrix size must be positive")
    positions = [(r, s) for r in range(n) for s in range(r, n)]
    return _matrix_units_algebra(B, n, positions, name or f"T{n}({B.name})")


def change_basis(A: AlgebraPresentation, P: QMatrix, name: str | None = None):
    """Re-present ``A`` in the basis given by the columns of invertible ``P``."""
    n = A.dim
    if P.rows != n or P.cols != n:
        raise DimensionMismatch("change of basis must be a square matrix of size dim A")
    new_basis = [P.column(j) for j in range(n)]
    P_inv = inverse(P)
    if P_inv is None:
        raise ValueError("change-of-basis matrix is singular")
    coords = P_inv.apply

    mult = [[coords(A.mul_coords(a, b)) for b in new_basis] for a in new_basis]
    names = [f"f{j}" for j in range(n)]
    return AlgebraPresentation(name or A.name, names, coords(A.unit), mult)


def subalgebra_dimension(elements: Sequence[Element]) -> int:
    """Dimension of the unital subalgebra generated by ``elements``."""
    A = elements[0].algebra
    S = span_of(A, [A.one(), *elements])
    while True:
        T = Subspace.span(
            list(S.basis) + [A.mul_coords(u, v) for u in S.basis for v in S.basis], A.dim
        )
        if T == S:
            return S.dim
        S = T
