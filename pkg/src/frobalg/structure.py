"""Radical, nilpotency index and Jordan-Chevalley splitting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraPresentation,
    Element,
    eval_poly_at_element,
    is_two_sided_ideal,
    minimal_poly_of_element,
    quotient,
    regular_representation,
    subspace_product,
)
from .errors import NotAnIdeal, NotNilpotent, VerificationError
from .exact import QMatrix, Subspace, kernel, solve_linear
from .hensel import newton_iterates, newton_multiplier
from .poly import squarefree_decomposition, squarefree_part


@dataclass(frozen=True)
class RadicalReport:
    radical: Subspace
    nilpotency_index: int
    is_semisimple: bool


def trace_form(A: AlgebraPresentation) -> QMatrix:
    """Gram matrix ``G[i][j] = trace(L_{e_i e_j})``."""
    tau = A.trace_form_weights()
    n = A.dim
    return QMatrix(
        [[sum((c * tau[k] for k, c in enumerate(A.mult[i][j]) if c), Fraction(0)) for j in range(n)] for i in range(n)],
        n,
    )


def _radical_subspace(A: AlgebraPresentation) -> Subspace:
    # characteristic 0: x is in rad(A) iff trace(L_{x y}) = 0 for all y
    return kernel(trace_form(A))


def radical(A: AlgebraPresentation) -> RadicalReport:
    """The Jacobson radical via the trace form, with post-verification."""
    rad = _radical_subspace(A)
    if not is_two_sided_ideal(A, rad):
        raise VerificationError("trace-form kernel is not an ideal; is the presentation valid?")
    try:
        nu = nilpotency_index(A, rad)
    except NotNilpotent as exc:
        raise VerificationError("trace-form kernel is not nilpotent") from exc
    if rad.dim:
        Q, _ = quotient(A, rad)
        if _radical_subspace(Q).dim:
            raise VerificationError("quotient by the radical is not semisimple")
    return RadicalReport(rad, nu, rad.dim == 0)


def nilpotency_index(A: AlgebraPresentation, I: Subspace) -> int:
    """Least ``nu`` with ``I^nu = 0``."""
    if not is_two_sided_ideal(A, I):
        raise NotAnIdeal("subspace is not a two-sided ideal")
    power, nu = I, 1
    while power.dim:
        nxt = subspace_product(A, power, I)
        if nxt == power:
            raise NotNilpotent(f"ideal powers stabilize at dimension {power.dim}", stable=power)
        power, nu = nxt, nu + 1
    return nu


def ideal_power(A: AlgebraPresentation, I: Subspace, k: int) -> Subspace:
    power = I
    for _ in range(k - 1):
        power = subspace_product(A, power, I)
    return power


def is_nilpotent(a: Element) -> bool:
    mu = minimal_poly_of_element(a)
    return all(c == 0 for c in mu.coeffs[:-1])


def polynomial_in(b: Element, s: Element) -> bool:
    """Whether ``s`` lies in the unital subalgebra generated by ``b``."""
    A = b.algebra
    powers, p = [], A.one()
    for _ in range(A.dim):
        powers.append(p.coords)
        p = p * b
    return solve_linear(QMatrix.from_columns(powers, A.dim), s.coords) is not None


def jordan_chevalley(b: Element) -> tuple[Element, Element]:
    """``b = s + n`` with ``s`` a root of the square-free part of ``mu_b``.

    ``s`` is found by the shared Newton iteration on ``g = squarefree_part(mu_b)``
    started at ``b``; ``g(b)`` is nilpotent, so the iteration terminates with
    ``s`` a polynomial in ``b``.
    """
    mu = minimal_poly_of_element(b)
    g = squarefree_part(mu)
    if g == mu:
        s = b
    else:
        multiplicity = len(squarefree_decomposition(mu))
        steps = max(multiplicity - 1, 1).bit_length()
        iterates, _ = newton_iterates(g, b, max_steps=steps, h=newton_multiplier(g))
        s = iterates[-1]
    n = b - s
    if s * n != n * s:
        raise VerificationError("semisimple and nilpotent parts do not commute")
    if not eval_poly_at_element(g, s).is_zero():
        raise VerificationError("semisimple part is not a root of the square-free part")
    if not is_nilpotent(n):
        raise VerificationError("nilpotent part is not nilpotent")
    if not polynomial_in(b, s):
        raise VerificationError("semisimple part is not a polynomial in b")
    return s, n


def centralizer(b: Element) -> Subspace:
    """``{x : b x = x b}``."""
    L, R = regular_representation(b)
    return kernel(L - R)
