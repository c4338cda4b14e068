"""Witness and certificate searches for complex and quaternion structure.

Every search is bounded by an explicit candidate budget and a seed.  A
returned witness or certificate has been re-verified by exact arithmetic;
``unknown`` only means the budget ran out.

Candidates are generated in a fixed order: basis elements, then
``e_i + e_j`` and ``e_i - e_j`` for ``i < j``, then seeded random
combinations with coefficients in {-2, ..., 2}.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .algebra import (
    AlgebraPresentation,
    Element,
    invert,
    left_ideal_span,
    minimal_poly_of_element,
    regular_representation,
    span_of,
    two_sided_ideal_span,
)
from .exact import QMatrix, Subspace, kernel, rank
from .poly import Poly, sturm_count, sturm_sequence, squarefree_part
from .structure import radical

DEFAULT_BUDGET = 500

WITNESS, CERTIFICATE, UNKNOWN = "witness", "certificate", "unknown"


@dataclass(frozen=True)
class ComplexWitness:
    element: Element
    minimal_polynomial: Poly
    sturm_sequence: tuple
    real_root_count: int

    def verify(self) -> bool:
        mu = minimal_poly_of_element(self.element)
        return mu == self.minimal_polynomial and sturm_count(squarefree_part(mu)) == 0


@dataclass(frozen=True)
class QuaternionWitness:
    """``a^2 = -lam``, ``b^2 = -mu``, ``a o b = 0`` with ``lam, mu > 0``."""

    a: Element
    b: Element
    lam: Fraction
    mu: Fraction

    def verify(self) -> bool:
        A = self.a.algebra
        return (
            self.lam > 0
            and self.mu > 0
            and self.a * self.a == A.scalar(-self.lam)
            and self.b * self.b == A.scalar(-self.mu)
            and self.a.circ(self.b).is_zero()
        )


@dataclass(frozen=True)
class AnticommutingPair:
    u: Element
    v: Element
    u_inverse: Element
    v_inverse: Element

    def verify(self) -> bool:
        one = self.u.algebra.one()
        return (
            self.u * self.u_inverse == one
            and self.u_inverse * self.u == one
            and self.v * self.v_inverse == one
            and self.v_inverse * self.v == one
            and self.u.circ(self.v).is_zero()
        )


@dataclass(frozen=True)
class IdealCertificate:
    kind: str  # "left" | "two-sided"
    generators: tuple
    subspace: Subspace
    dim: int
    source: str = ""  # how the ideal was sampled, e.g. "radical" or "principal"


@dataclass(frozen=True)
class ClassifyOutcome:
    variant: str
    payload: object
    budget_used: int
    budget: int
    seed: int
    notes: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.variant != UNKNOWN


# -- candidate generation -------------------------------------------------------------


def candidates(A: AlgebraPresentation, seed: int) -> Iterator[Element]:
    """Infinite deterministic stream of nonzero candidate elements."""
    basis = A.basis()
    yield from basis
    for i, j in itertools.combinations(range(A.dim), 2):
        yield basis[i] + basis[j]
        yield basis[i] - basis[j]
    rng = random.Random(seed)
    while True:
        coords = [rng.randint(-2, 2) for _ in range(A.dim)]
        if any(coords):
            yield A.element(coords)


def _subspace_candidates(A: AlgebraPresentation, S: Subspace, rng: random.Random) -> Iterator[Element]:
    basis = [A.element(row) for row in S.basis]
    yield from basis
    for i, j in itertools.combinations(range(len(basis)), 2):
        yield basis[i] + basis[j]
        yield basis[i] - basis[j]
    if not basis:
        return
    while True:
        coeffs = [rng.randint(-2, 2) for _ in basis]
        if any(coeffs):
            e = A.zero()
            for c, b in zip(coeffs, basis):
                if c:
                    e = e + b * c
            yield e


class _Budget:
    def __init__(self, total: int):
        self.total = total
        self.used = 0

    def take(self, stream):
        for item in stream:
            if self.used >= self.total:
                return
            self.used += 1
            yield item


def anticommutant(a: Element) -> Subspace:
    """``{x : a x + x a = 0}``."""
    L, R = regular_representation(a)
    return kernel(L + R)


def complete_square(b: Element):
    """For ``mu_b = X^2 + pX + q`` with ``p^2 < 4q`` return ``(b + p/2, q - p^2/4)``."""
    mu = minimal_poly_of_element(b)
    if mu.degree != 2:
        return None
    q, p = mu.coeffs[0], mu.coeffs[1]
    lam = q - p * p / 4
    if lam <= 0:
        return None
    a = b + p / 2
    if a * a != a.algebra.scalar(-lam):
        raise AssertionError("completing the square failed")
    return a, lam


def _negative_scalar_square(c: Element) -> Fraction | None:
    s = (c * c).scalar_value()
    if s is not None and s < 0:
        return -s
    return None


# -- complex structure ------------------------------------------------------------------


def _split_square(b: Element):
    """For ``mu_b = X^2 + pX + q`` with ``p^2 > 4q`` return ``b + p/2`` (a positive scalar square)."""
    mu = minimal_poly_of_element(b)
    if mu.degree != 2:
        return None
    q, p = mu.coeffs[0], mu.coeffs[1]
    if p * p / 4 - q <= 0:
        return None
    return b + p / 2


def _derived_complex_candidates(A: AlgebraPresentation, seed: int, rng: random.Random):
    # a^2 = s > 0 and c invertible with a o c = 0: c^2 and (ac)^2 = -s c^2 are
    # scalars of opposite signs whenever c^2 is a nonzero scalar
    for b in candidates(A, seed):
        a = _split_square(b)
        yield b
        if a is None:
            continue
        K = anticommutant(a)
        for c in itertools.islice(_subspace_candidates(A, K, rng), 4 * K.dim):
            yield c
            yield a * c


def find_complex_witness(A: AlgebraPresentation, budget: int = DEFAULT_BUDGET, seed: int = 0) -> ClassifyOutcome:
    """Search for ``a`` whose minimal polynomial has no real roots.

    The first half of the budget scans the plain candidate stream; the rest
    also tries elements built from anticommutants of split square roots.
    """
    spend = _Budget(budget)
    rng = random.Random(seed + 1)
    first = budget // 2

    def plain():
        for a in candidates(A, seed):
            if spend.used >= first:
                return
            yield a

    for stream in (plain(), _derived_complex_candidates(A, seed, rng)):
        for a in spend.take(stream):
            if a.is_zero():
                continue
            mu = minimal_poly_of_element(a)
            g = squarefree_part(mu)
            if sturm_count(g) == 0:
                w = ComplexWitness(a, mu, tuple(str(p) for p in sturm_sequence(g)), 0)
                if not w.verify():
                    raise AssertionError("complex witness failed verification")
                return ClassifyOutcome(WITNESS, w, spend.used, budget, seed)
    return ClassifyOutcome(UNKNOWN, None, spend.used, budget, seed)


def sample_left_ideals(A: AlgebraPresentation, seed: int, two_sided: bool = False):
    """Radical first, then principal ideals of candidates, interleaved with pairwise sums."""
    kind = "two-sided" if two_sided else "left"
    span = two_sided_ideal_span if two_sided else left_ideal_span
    rad = radical(A).radical
    yield IdealCertificate(kind, tuple(A.element(r) for r in rad.basis), rad, rad.dim, "radical")
    seen: list[tuple[tuple, Subspace]] = []
    for v in candidates(A, seed):
        S = span(A, [v])
        yield IdealCertificate(kind, (v,), S, S.dim, "principal")
        if any(S == T for _, T in seen):
            continue
        for gens, T in seen[-4:]:
            both = gens + (v,)
            U = span(A, list(both))
            yield IdealCertificate(kind, both, U, U.dim, "sum")
        seen.append(((v,), S))


def _certificate_search(A, budget, seed, predicate, two_sided=False) -> ClassifyOutcome:
    spend = _Budget(budget)
    for cert in spend.take(sample_left_ideals(A, seed, two_sided)):
        if predicate(cert.dim):
            if not verify_ideal_certificate(A, cert):
                raise AssertionError("ideal certificate failed verification")
            return ClassifyOutcome(CERTIFICATE, cert, spend.used, budget, seed)
    return ClassifyOutcome(UNKNOWN, None, spend.used, budget, seed)


def verify_ideal_certificate(A: AlgebraPresentation, cert: IdealCertificate) -> bool:
    """Closure under the stated multiplications, dimension, and regeneration from generators."""
    S = cert.subspace
    if S.dim != cert.dim or S.ambient_dim != A.dim:
        return False
    basis = A.basis()
    for row in S.basis:
        for e in basis:
            if not S.contains(A.mul_coords(e.coords, row)):
                return False
            if cert.kind == "two-sided" and not S.contains(A.mul_coords(row, e.coords)):
                return False
    if cert.generators:
        span = left_ideal_span if cert.kind == "left" else two_sided_ideal_span
        if cert.source == "radical":
            return span_of(A, cert.generators) == S
        return span(A, list(cert.generators)) == S
    return S.dim == 0


def find_odd_left_ideal_certificate(A, budget: int = DEFAULT_BUDGET, seed: int = 0) -> ClassifyOutcome:
    """A left ideal of odd dimension: no element can avoid real spectrum."""
    return _certificate_search(A, budget, seed, lambda d: d % 2 == 1)


def find_left_ideal_mod4_certificate(A, budget: int = DEFAULT_BUDGET, seed: int = 0) -> ClassifyOutcome:
    """A left ideal whose dimension is not a multiple of 4."""
    return _certificate_search(A, budget, seed, lambda d: d % 4 != 0)


def find_two_sided_mod4_certificate(A, budget: int = DEFAULT_BUDGET, seed: int = 0) -> ClassifyOutcome:
    return _certificate_search(A, budget, seed, lambda d: d % 4 != 0, two_sided=True)


# -- quaternion structure -------------------------------------------------------------


def find_quaternion_witness(A: AlgebraPresentation, budget: int = DEFAULT_BUDGET, seed: int = 0) -> ClassifyOutcome:
    """Search for ``a, b`` with negative scalar squares and ``a o b = 0``.

    ``a`` comes from a candidate with irreducible quadratic minimal polynomial
    after completing the square; ``b`` is searched inside the anticommutant of ``a``.
    """
    spend = _Budget(budget)
    rng = random.Random(seed + 1)
    for cand in spend.take(candidates(A, seed)):
        found = complete_square(cand)
        if found is None:
            continue
        a, lam = found
        K = anticommutant(a)
        if not K.dim:
            continue
        inner = itertools.islice(_subspace_candidates(A, K, rng), 4 * K.dim + K.dim * K.dim)
        for c in spend.take(inner):
            mu = _negative_scalar_square(c)
            if mu is not None:
                w = QuaternionWitness(a, c, lam, mu)
                if not w.verify():
                    raise AssertionError("quaternion witness failed verification")
                return ClassifyOutcome(WITNESS, w, spend.used, budget, seed)
    return ClassifyOutcome(UNKNOWN, None, spend.used, budget, seed)


def find_anticommuting_pair(A: AlgebraPresentation, budget: int = DEFAULT_BUDGET, seed: int = 0) -> ClassifyOutcome:
    """Invertible ``u, v`` with ``u o v = 0``; falls back to a two-sided mod-4 certificate.

    The first half of the budget tries ``u`` with a negative scalar square
    (the block construction ``a^2 = -1``); the rest tries any invertible ``u``.
    """
    spend = _Budget(budget)
    rng = random.Random(seed + 1)
    first = budget // 2

    def complex_type():
        for cand in candidates(A, seed):
            if spend.used >= first:
                return
            found = complete_square(cand)
            yield found[0] if found else None

    def any_invertible():
        for cand in candidates(A, seed):
            yield cand

    for stream in (complex_type(), any_invertible()):
        for u in spend.take(stream):
            if u is None:
                continue
            u_inv = invert(u)
            if u_inv is None:
                continue
            K = anticommutant(u)
            if not K.dim:
                continue
            inner = itertools.islice(_subspace_candidates(A, K, rng), 4 * K.dim + K.dim * K.dim)
            for v in spend.take(inner):
                v_inv = invert(v)
                if v_inv is not None:
                    pair = AnticommutingPair(u, v, u_inv, v_inv)
                    if not pair.verify():
                        raise AssertionError("anticommuting pair failed verification")
                    return ClassifyOutcome(WITNESS, pair, spend.used, budget, seed)
    cert = find_two_sided_mod4_certificate(A, budget, seed)
    used = spend.used + cert.budget_used
    if cert.variant == CERTIFICATE:
        return ClassifyOutcome(CERTIFICATE, cert.payload, used, budget, seed)
    return ClassifyOutcome(UNKNOWN, None, used, budget, seed)


# -- Frobenius ----------------------------------------------------------------------------


def square_class(x: Fraction) -> int:
    """Square-free integer ``d`` with ``x = d s^2`` for some rational ``s``."""
    x = Fraction(x)
    if not x:
        raise ValueError("zero has no square class")
    n = abs(x.numerator * x.denominator)
    d, p = 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
        if n % p == 0:
            d *= p
            n //= p
        p += 1
    d *= n
    return d if x > 0 else -d


@dataclass(frozen=True)
class FrobeniusResult:
    kind: str  # "R" | "C" | "H" | "NotRealDivision"
    lam: Fraction | None = None
    mu: Fraction | None = None
    basis: tuple = ()
    evidence: dict = field(default_factory=dict)

    @property
    def lam_class(self) -> int | None:
        return square_class(self.lam) if self.lam is not None else None

    @property
    def mu_class(self) -> int | None:
        return square_class(self.mu) if self.mu is not None else None


def _rational_roots_of_quadratic(mu: Poly):
    q, p = mu.coeffs[0], mu.coeffs[1]
    disc = p * p - 4 * q
    num, den = disc.numerator, disc.denominator
    if disc < 0:
        return None
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    root = Fraction(rn, rd)
    return (-p + root) / 2, (-p - root) / 2


def frobenius_classify(D: AlgebraPresentation) -> FrobeniusResult:
    """Recognize rational models of the real division algebras R, C and H.

    Follows the constructive proof: quadratic minimal polynomials without real
    roots, completing the square to get ``a^2 = -lam``, then an element of the
    anticommutant of ``a`` with negative scalar square.
    """
    n = D.dim
    one = D.one()
    if n == 1:
        return FrobeniusResult("R", basis=(one,))
    b = next(e for e in D.basis() if e.scalar_value() is None)
    mu = minimal_poly_of_element(b)
    evidence = {"element": b, "minimal_polynomial": mu}
    if mu.degree > 2:
        evidence["reason"] = "minimal polynomial has degree > 2"
        return FrobeniusResult("NotRealDivision", evidence=evidence)
    real_roots = sturm_count(mu)
    if real_roots:
        evidence["reason"] = "minimal polynomial has real roots"
        evidence["sturm_count"] = real_roots
        roots = _rational_roots_of_quadratic(mu)
        if roots is not None:
            r1, r2 = roots
            x, y = b - r1, b - r2
            if (x * y).is_zero() and not x.is_zero() and not y.is_zero():
                evidence["zero_divisors"] = (x, y)
        return FrobeniusResult("NotRealDivision", evidence=evidence)
    a, lam = complete_square(b)
    if n == 2:
        return FrobeniusResult("C", lam=lam, basis=(one, a))
    if n != 4:
        return FrobeniusResult(
            "NotRealDivision",
            evidence={"reason": f"dimension {n} is not 1, 2 or 4", "element": a},
        )
    K = anticommutant(a)
    if not K.dim:
        return FrobeniusResult("NotRealDivision", evidence={"reason": "a anticommutes with nothing", "element": a})
    v = D.element(K.basis[0])
    square = (v * v).scalar_value()
    if square is None or square >= 0:
        return FrobeniusResult(
            "NotRealDivision",
            evidence={"reason": "anticommuting element has no negative scalar square", "element": v, "square": v * v},
        )
    mu_v = -square
    av = a * v
    basis = (one, a, v, av)
    relations = {
        "a^2 = -lam": a * a == D.scalar(-lam),
        "v^2 = -mu": v * v == D.scalar(-mu_v),
        "a o v = 0": a.circ(v).is_zero(),
        "(av)^2 = -lam*mu": av * av == D.scalar(-lam * mu_v),
        "basis spans": rank(QMatrix([e.coords for e in basis], n)) == 4,
    }
    failed = [k for k, ok in relations.items() if not ok]
    if failed:
        return FrobeniusResult("NotRealDivision", evidence={"reason": f"failed {failed}", "element": v})
    return FrobeniusResult("H", lam=lam, mu=mu_v, basis=basis)
