"""Seeded random (A, I, f, b) cases for the lifting suites.

A is upper-triangular n x n over a base B (or B tensor Tri(n)), I = rad(A),
f is a product of distinct factors X - r and X^2 + pX + c with p^2 - 4c < 0,
and b = (diagonal of roots of f in B) + (random radical element).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from frobalg.algebra import AlgebraPresentation, Element, invert
from frobalg.catalog import catalog
from frobalg.exact import Subspace
from frobalg.poly import Poly, is_separable
from frobalg.structure import radical

# (catalog expression, max n)
BASES = [
    ("Q", 6),
    ("Cneg(-1)", 4),
    ("Cneg(-2)", 3),
    ("Cneg(-7)", 3),
    ("Quat(-1,-1)", 2),
    ("Quat(-1,-3)", 2),
]


@dataclass
class Case:
    algebra: AlgebraPresentation
    ideal: Subspace
    f: Poly
    b: Element
    diagonal: Element
    label: str


def _rat(rng, lo=-4, hi=4, den=(1, 1, 2, 3)):
    return Fraction(rng.randint(lo, hi), rng.choice(den))


def _layout(rng):
    expr, max_n = rng.choice(BASES)
    n = rng.randint(2, max_n) if max_n > 1 else 1
    tensor = expr != "Q" and rng.random() < 0.3
    return expr, n, tensor


@lru_cache(maxsize=None)
def build_triangular(expr: str, n: int, tensor: bool):
    """Return (A, B, unit) where unit(r, s, x) embeds x in B at position (r, s)."""
    B = catalog(expr)
    if expr == "Q":
        A = catalog(f"Tri({n})")

        def name(r, s, k):
            return f"e{r}{s}"
    elif tensor:
        A = catalog(f"Tensor({expr},Tri({n}))")

        def name(r, s, k):
            bn = B.basis_names[k]
            return f"e{r}{s}" if bn == "1" else f"{bn}*e{r}{s}"
    else:
        A = catalog(f"Tri({expr},{n})")

        def name(r, s, k):
            return f"e{r}{s}*{B.basis_names[k]}"

    def unit(r, s, x: Element) -> Element:
        out = A.zero()
        for k, c in enumerate(x.coords):
            if c:
                out = out + A.by_name(name(r, s, k)) * c
        return out

    return A, B, unit


@lru_cache(maxsize=None)
def _setup(expr: str, n: int, tensor: bool):
    A, B, unit = build_triangular(expr, n, tensor)
    return A, B, unit, radical(A).radical


def _factors_and_roots(rng, expr: str, B: AlgebraPresentation):
    """Distinct factors of f, each paired with a sampler of its roots in B (or None)."""
    factors = []
    count = rng.randint(1, 3)
    used_linear, used_quad = set(), set()
    while len(factors) < count:
        if expr == "Q" or rng.random() < 0.4:
            r = _rat(rng)
            if r in used_linear:
                continue
            used_linear.add(r)
            factors.append((Poly((-r, 1)), lambda rng, r=r: B.scalar(r)))
            if expr == "Q" and len(factors) < count and rng.random() < 0.5:
                # an irreducible quadratic with no root in Q
                p = Fraction(rng.randint(-3, 3))
                c = p * p / 4 + rng.randint(1, 4)
                if (p, c) not in used_quad:
                    used_quad.add((p, c))
                    factors.append((Poly((c, p, 1)), None))
            continue
        p = Fraction(rng.randint(-3, 3))
        s = Fraction(rng.randint(1, 3), rng.choice((1, 2)))
        v0 = B.basis_element(1) * s
        square = (v0 * v0).scalar_value()
        c = p * p / 4 - square
        if (p, c) in used_quad:
            continue
        used_quad.add((p, c))

        def root(rng, p=p, v0=v0):
            sign = rng.choice((1, -1))
            v = v0 * sign
            if B.dim == 4:
                g = B.element([rng.randint(-2, 2) for _ in range(4)])
                gi = invert(g)
                if gi is not None:
                    v = g * v * gi
            return B.scalar(-p / 2) + v

        factors.append((Poly((c, p, 1)), root))
    return factors


def hensel_case(seed: int) -> Case:
    rng = random.Random(seed)
    expr, n, tensor = _layout(rng)
    A, B, unit, I = _setup(expr, n, tensor)
    factors = _factors_and_roots(rng, expr, B)
    f = Poly((1,))
    for g, _ in factors:
        f = f * g
    assert is_separable(f)
    samplers = [s for _, s in factors if s is not None]
    d = A.zero()
    for i in range(1, n + 1):
        d = d + unit(i, i, rng.choice(samplers)(rng))
    y = A.zero()
    for row in I.basis:
        y = y + A.element(row) * rng.randint(-2, 2)
    label = f"{'Tensor' if tensor else 'Tri'}[{expr}, n={n}] f={f}"
    return Case(A, I, f, d + y, d, label)


def idempotent_case(seed: int) -> Case:
    rng = random.Random(10_000 + seed)
    expr, n, tensor = _layout(rng)
    A, B, unit, I = _setup(expr, n, tensor)
    d = A.zero()
    for i in range(1, n + 1):
        if rng.random() < 0.5:
            d = d + unit(i, i, B.one())
    y = A.zero()
    for row in I.basis:
        y = y + A.element(row) * rng.randint(-2, 2)
    return Case(A, I, Poly((0, -1, 1)), d + y, d, f"idempotent {expr} n={n}")
