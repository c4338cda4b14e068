"""Univariate polynomials over the rationals.

Coefficients are stored lowest degree first with no trailing zeros; the
zero polynomial has an empty coefficient tuple and degree ``None``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PolySyntaxError
from .exact import QMatrix, first_dependency, format_rational, to_rational


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> Poly:
        p = cls((1,))
        for r in roots:
            p = p * cls((-to_rational(r), 1))
        return p

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        inv = 1 / self.coeffs[-1]
        return Poly(c * inv for c in self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other) -> Poly:
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        return poly_divmod(self, _as_poly(other))

    def __floordiv__(self, other) -> Poly:
        return poly_divmod(self, _as_poly(other))[0]

    def __mod__(self, other) -> Poly:
        return poly_divmod(self, _as_poly(other))[1]

    def __call__(self, x):
        """Horner evaluation at a rational (or anything with + and *)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, other: Poly) -> Poly:
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    return Poly.constant(p)


def format_poly(p: Poly) -> str:
    """Render in the parseable grammar, highest degree first."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            mono = "X" if k == 1 else f"X^{k}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        if not parts:
            if c < 0:
                # a bare leading "-X" is outside the grammar; signs only live on literals
                body = f"-{body}" if k == 0 or mag != 1 else f"-1*{body}"
            parts.append(body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f.coeffs)
    dg = g.degree
    inv_lead = 1 / g.lead
    q = [Fraction(0)] * max(len(r) - dg, 0)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k]
        if not c:
            continue
        c *= inv_lead
        q[k - dg] = c
        for i, gc in enumerate(g.coeffs):
            if gc:
                r[k - dg + i] -= c * gc
    return Poly(q), Poly(r[:dg] if dg else ())


def poly_egcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(d, u, v)`` with ``u*f + v*g == d`` and ``d`` the monic gcd."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    r0, r1 = f, g
    s0, s1 = Poly((1,)), Poly()
    t0, t1 = Poly(), Poly((1,))
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lead
    d, u, v = r0 * inv, s0 * inv, t0 * inv
    if u * f + v * g != d:
        raise AssertionError("Bezout identity failed")
    return d, u, v


def poly_gcd(f: Poly, g: Poly) -> Poly:
    return poly_egcd(f, g)[0]


def is_separable(f: Poly) -> bool:
    if f.is_zero():
        raise ValueError("separability of the zero polynomial is undefined")
    return poly_gcd(f, f.derivative()).degree == 0


def squarefree_decomposition(f: Poly) -> list[Poly]:
    """Yun's algorithm: monic ``[a1, a2, ...]`` with ``monic(f) = prod a_i^i``."""
    if f.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - b.derivative()
    factors = []
    while b.degree > 0:
        ai = poly_gcd(b, d)
        factors.append(ai)
        b = b // ai
        c = d // ai
        d = c - b.derivative()
    return factors


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of ``f``."""
    p = Poly((1,))
    for a in squarefree_decomposition(f):
        p = p * a
    return p


def sturm_sequence(f: Poly) -> list[Poly]:
    seq = [f, f.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _sign_changes(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def sturm_count(f: Poly) -> int:
    """Number of distinct real roots of ``f``."""
    if f.is_zero():
        raise ValueError("root count of the zero polynomial is undefined")
    seq = sturm_sequence(squarefree_part(f))
    at_pos_inf = [1 if p.lead > 0 else -1 for p in seq]
    at_neg_inf = [s if p.degree % 2 == 0 else -s for s, p in zip(at_pos_inf, seq)]
    return _sign_changes(at_neg_inf) - _sign_changes(at_pos_inf)


def minimal_polynomial_of(vectors) -> Poly:
    """Monic minimal polynomial from a lazy sequence of flattened powers."""
    found = first_dependency(vectors)
    if found is None:
        raise AssertionError("powers never became dependent")
    d, combo = found
    return Poly(tuple(-c for c in combo) + (Fraction(1),))


def minimal_polynomial(m: QMatrix) -> Poly:
    if not m.is_square():
        raise ValueError("minimal polynomial needs a square matrix")
    n = m.rows

    def powers():
        p = QMatrix.identity(n)
        while True:
            yield p.entries
            p = p @ m

    mu = minimal_polynomial_of(powers())
    if not eval_poly_matrix(mu, m) == QMatrix.zeros(n, n):
        raise AssertionError("minimal polynomial does not annihilate the matrix")
    return mu


def eval_poly_matrix(f: Poly, m: QMatrix) -> QMatrix:
    n = m.rows
    acc = QMatrix.zeros(n, n)
    ident = QMatrix.identity(n)
    for c in reversed(f.coeffs):
        acc = acc @ m + ident.scale(c)
    return acc


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            raise PolySyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def digits(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise PolySyntaxError("expected digits", start)
        return int(self.text[start:self.pos])

    def expr(self) -> Poly:
        p = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.peek() == "*":
            self.pos += 1
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        b = self.base()
        if self.peek() == "^":
            self.pos += 1
            if self.peek() != "" and not self.text[self.pos].isdigit():
                raise PolySyntaxError("exponent must be a nonnegative integer", self.pos)
            b = b ** self.digits()
        return b

    def base(self) -> Poly:
        ch = self.peek()
        if ch == "X":
            self.pos += 1
            return Poly.x()
        if ch == "(":
            self.pos += 1
            p = self.expr()
            self.expect(")")
            return p
        if ch == "-" or ch.isdigit():
            negative = ch == "-"
            if negative:
                self.pos += 1
            num = self.digits()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den = self.digits()
                if den == 0:
                    raise PolySyntaxError("zero denominator", self.pos)
            value = Fraction(num, den)
            return Poly.constant(-value if negative else value)
        raise PolySyntaxError(f"unexpected {ch!r}" if ch else "unexpected end of input", self.pos)


def parse_poly(text: str) -> Poly:
    parser = _Parser(text)
    p = parser.expr()
    if parser.peek() != "":
        raise PolySyntaxError(f"unexpected {parser.peek()!r}", parser.pos)
    return p
