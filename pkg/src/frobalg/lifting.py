"""Lifting roots of polynomials modulo nilpotent ideals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraPresentation,
    Element,
    eval_poly_at_element,
    is_two_sided_ideal,
    subspace_product,
    triangular_algebra,
)
from .catalog import rationals
from .errors import NotAnIdeal, NotApplicable, ResidueNotInIdeal, VerificationError
from .exact import QMatrix, Subspace, rank, solve_linear, to_rational
from .hensel import newton_iterates, newton_multiplier
from .poly import Poly, is_separable
from .structure import nilpotency_index


def log2_ceil(nu: int) -> int:
    return (nu - 1).bit_length() if nu > 1 else 0


@dataclass(frozen=True)
class LiftResult:
    lifted: Element
    iterations: int
    residual_path: tuple  # nonzero-coordinate count of f(a_k) for every iterate
    iterates: tuple
    nilpotency_index: int


@dataclass(frozen=True)
class NoLiftWitness:
    """``f(b + y) = f(b) != 0`` for every ``y`` in ``ideal``: no root of ``f`` lifts ``b``."""

    algebra: AlgebraPresentation
    ideal: Subspace
    element: Element
    polynomial: Poly
    residue: Element
    proof: str

    def verify(self) -> bool:
        A, I, b, f = self.algebra, self.ideal, self.element, self.polynomial
        fb = eval_poly_at_element(f, b)
        if fb.is_zero() or not I.contains(fb.coords) or fb != self.residue:
            return False
        if not is_two_sided_ideal(A, I) or subspace_product(A, I, I).dim:
            return False
        for row in I.basis:
            if eval_poly_at_element(f, b + A.element(row)) != fb:
                return False
        return True


def _check_ideal(A: AlgebraPresentation, I: Subspace) -> int:
    if I.ambient_dim != A.dim:
        raise NotAnIdeal("ideal lives in the wrong ambient space")
    return nilpotency_index(A, I)


def hensel_lift(A: AlgebraPresentation, I: Subspace, b: Element, f: Poly) -> LiftResult:
    """Lift ``b`` to an exact root of separable ``f`` modulo nilpotent ``I``.

    Iterates ``a <- a - h(a) f(a)`` with ``g f + h f' = 1`` until ``f(a) = 0``;
    the number of steps never exceeds ``ceil(log2 nu)`` for ``I^nu = 0``.
    """
    if b.algebra is not A:
        raise ValueError("element does not belong to the algebra")
    h = newton_multiplier(f)
    residue = eval_poly_at_element(f, b)
    if not I.contains(residue.coords):
        raise ResidueNotInIdeal(f"f(b) = {residue.format()} is not in the ideal")
    nu = _check_ideal(A, I)
    iterates, residuals = newton_iterates(f, b, max_steps=A.dim + 1, h=h)
    lifted = iterates[-1]
    steps = len(iterates) - 1
    if steps > log2_ceil(nu):
        raise VerificationError(f"{steps} steps exceed the bound ceil(log2 {nu})")
    if not I.contains((lifted - b).coords):
        raise VerificationError("lift left the coset b + I")
    return LiftResult(
        lifted,
        steps,
        tuple(sum(1 for c in r.coords if c) for r in residuals),
        tuple(iterates),
        nu,
    )


IDEMPOTENT_POLY = Poly((0, -1, 1))  # X^2 - X


def lift_idempotent(A: AlgebraPresentation, I: Subspace, b: Element) -> Element:
    """Idempotent lift of ``b`` via ``c <- 3c^2 - 2c^3``.

    Cross-checked step by step against :func:`hensel_lift` for ``X^2 - X``.
    """
    residue = b * b - b
    if not I.contains(residue.coords):
        raise ResidueNotInIdeal("b^2 - b is not in the ideal")
    _check_ideal(A, I)
    path = [b]
    c = b
    while c * c != c:
        c2 = c * c
        c = c2 * 3 - c2 * c * 2
        path.append(c)
        if len(path) > A.dim + 2:
            raise VerificationError("idempotent iteration did not terminate")
    reference = hensel_lift(A, I, b, IDEMPOTENT_POLY)
    if tuple(path) != reference.iterates:
        raise VerificationError("idempotent iteration disagrees with the Newton iteration")
    return c


def generalized_binomial(r: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out = out * (r - i) / (i + 1)
    return out


def lift_mth_root(A: AlgebraPresentation, I: Subspace, b: Element, m: int, beta) -> Element:
    """Root of ``X^m - beta`` congruent to ``b`` via the binomial series.

    With ``b^m = beta (1 + w)``, ``z = sum C(-1/m, n) w^n`` gives ``(z b)^m = beta``.
    """
    beta = to_rational(beta)
    if not beta:
        raise ValueError("beta must be nonzero")
    if m < 1:
        raise ValueError("m must be positive")
    w = b ** m / beta - 1
    if not I.contains(w.coords):
        raise ResidueNotInIdeal("b^m - beta is not in the ideal")
    nu = _check_ideal(A, I)
    exponent = Fraction(-1, m)
    z, wn = A.zero(), A.one()
    for n in range(nu):
        z = z + wn * generalized_binomial(exponent, n)
        wn = wn * w
    a = z * b
    if a ** m != A.scalar(beta) or not I.contains((a - b).coords):
        raise VerificationError("binomial-series root failed verification")
    return a


def root_multiplicity(f: Poly, root) -> int:
    root = to_rational(root)
    linear = Poly((-root, 1))
    k = 0
    while not f.is_zero() and f(root) == 0:
        f = f // linear
        k += 1
    return k


def inseparable_witness(f: Poly, repeated_root) -> NoLiftWitness:
    """Counterexample to lifting for ``f`` with a rational root of multiplicity >= 2.

    In upper-triangular ``(k+1) x (k+1)`` matrices take the ideal spanned by
    ``e_{1,k+1}`` and ``b = beta + e_12 + ... + e_{k,k+1}``.  Then ``f(b)`` is a
    nonzero element of the ideal and ``f(b + y) = f(b)`` for all ``y`` in it.
    """
    beta = to_rational(repeated_root)
    if f.is_zero():
        raise NotApplicable("zero polynomial")
    if is_separable(f):
        raise NotApplicable(f"{f} is separable; every root lifts")
    k = root_multiplicity(f, beta)
    if k < 2:
        raise NotApplicable(f"{beta} is not a repeated root of {f}")
    A = triangular_algebra(rationals(), k + 1, name=f"Tri({k + 1})")

    def unit(r, s):
        return A.by_name(f"e{r}{s}" if k + 1 < 10 else f"e{r}_{s}")

    I = Subspace.span([unit(1, k + 1).coords], A.dim)
    b = A.scalar(beta)
    for i in range(1, k + 1):
        b = b + unit(i, i + 1)
    residue = eval_poly_at_element(f, b)
    witness = NoLiftWitness(
        A,
        I,
        b,
        f,
        residue,
        "strictly upper triangular t and u in I satisfy t u = u t = 0, "
        "so every term of f(b + y) - f(b) vanishes",
    )
    if not witness.verify():
        raise VerificationError("inseparable witness failed verification")
    return witness


@dataclass(frozen=True)
class Feasible:
    u: Element
    v: Element
    a: Element
    b: Element


@dataclass(frozen=True)
class Infeasible:
    coefficient_rank: int
    augmented_rank: int
    equations: int
    unknowns: int


def quaternion_lift_feasibility(A: AlgebraPresentation, I: Subspace, x: Element, y: Element):
    """Decide whether ``x, y`` lift to an exact quaternion pair modulo ``I``.

    Looks for ``u, v`` in ``I`` with ``(x+u)^2 = (y+v)^2 = -1`` and
    ``(x+u) o (y+v) = 0``.  Because ``I^2 = 0`` these conditions are affine in
    ``(u, v)``, so one exact linear solve settles the question.
    """
    if not is_two_sided_ideal(A, I):
        raise NotAnIdeal("feasibility needs a two-sided ideal")
    if subspace_product(A, I, I).dim:
        raise NotApplicable("the linearization requires I^2 = 0")
    one = A.one()
    for name, e in (("x", x), ("y", y)):
        if not I.contains((e * e + one).coords):
            raise NotApplicable(f"{name}^2 != -1 modulo the ideal")
    ideal_basis = [A.element(row) for row in I.basis]
    r, n = len(ideal_basis), A.dim
    zero_col = (Fraction(0),) * n
    columns = []
    # unknown alpha_p multiplies w_p in u; unknown beta_q multiplies w_q in v
    for w in ideal_basis:
        columns.append(x.circ(w).coords + zero_col + w.circ(y).coords)
    for w in ideal_basis:
        columns.append(zero_col + y.circ(w).coords + x.circ(w).coords)
    rhs = (-one - x * x).coords + (-one - y * y).coords + (-x.circ(y)).coords
    if not columns:
        M = QMatrix.zeros(3 * n, 0)
    else:
        M = QMatrix.from_columns(columns, 3 * n)
    sol = solve_linear(M, rhs) if r else (None if any(rhs) else ())
    if sol is None:
        augmented = QMatrix([list(row) + [c] for row, c in zip(M.to_rows(), rhs)], M.cols + 1)
        return Infeasible(rank(M) if r else 0, rank(augmented), 3 * n, 2 * r)
    u, v = A.zero(), A.zero()
    for p, w in enumerate(ideal_basis):
        u = u + w * sol[p]
        v = v + w * sol[r + p]
    a, b = x + u, y + v
    if a * a != -one or b * b != -one or not a.circ(b).is_zero():
        raise VerificationError("linearized solution failed direct verification")
    if not I.contains(u.coords) or not I.contains(v.coords):
        raise VerificationError("correction left the ideal")
    return Feasible(u, v, a, b)
