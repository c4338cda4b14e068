"""Named algebra constructors and random re-presentations.

Catalog expressions are written ``Name`` or ``Name(arg, ...)`` where each
argument is a rational literal or a nested catalog expression, e.g.
``Quat(-1,-1)``, ``Mat(Cneg(-1),2)``, ``Tri(3)`` or ``Prod(Q,Mat(2))``.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction

from .algebra import (
    AlgebraPresentation,
    change_basis,
    direct_product,
    matrix_algebra,
    require_valid,
    tensor_product,
    triangular_algebra,
)
from .errors import CatalogError
from .exact import QMatrix, rank, to_rational

F0, F1 = Fraction(0), Fraction(1)


def _table(dim, products):
    """Structure constants from ``{(i, j): {k: c}}``."""
    mult = [[[F0] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), out in products.items():
        for k, c in out.items():
            mult[i][j][k] = to_rational(c)
    return mult


def rationals() -> AlgebraPresentation:
    return AlgebraPresentation("Q", ["1"], [1], [[[1]]])


def quadratic_algebra(q, name: str | None = None) -> AlgebraPresentation:
    """``Q[u]/(u^2 - q)`` for any nonzero rational ``q``."""
    q = to_rational(q)
    if not q:
        raise CatalogError("u^2 = 0 is not a quadratic field-type algebra; use Trunc(2)")
    mult = _table(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {0: q}})
    return AlgebraPresentation(name or f"Quad({q})", ["1", "u"], [1, 0], mult)


def cneg(q) -> AlgebraPresentation:
    """``Q[u]/(u^2 - q)`` with ``q < 0``: a rational model of the complex numbers."""
    q = to_rational(q)
    if q >= 0:
        raise CatalogError(f"Cneg needs a negative parameter, got {q}")
    return quadratic_algebra(q, name=f"Cneg({q})")


def quaternion_algebra(alpha, beta) -> AlgebraPresentation:
    """Symbol algebra ``(alpha, beta)``: i^2 = alpha, j^2 = beta, k = ij = -ji."""
    a, b = to_rational(alpha), to_rational(beta)
    if not a or not b:
        raise CatalogError("quaternion parameters must be nonzero")
    one, i, j, k = range(4)
    products = {
        (one, one): {one: 1}, (one, i): {i: 1}, (one, j): {j: 1}, (one, k): {k: 1},
        (i, one): {i: 1}, (j, one): {j: 1}, (k, one): {k: 1},
        (i, i): {one: a}, (j, j): {one: b}, (k, k): {one: -a * b},
        (i, j): {k: 1}, (j, i): {k: -1},
        (i, k): {j: a}, (k, i): {j: -a},
        (j, k): {i: -b}, (k, j): {i: b},
    }
    return AlgebraPresentation(f"Quat({a},{b})", ["1", "i", "j", "k"], [1, 0, 0, 0], _table(4, products))


def truncated_polynomials(k: int) -> AlgebraPresentation:
    """``Q[eps]/(eps^k)`` with basis 1, eps, ..., eps^(k-1)."""
    if k < 1:
        raise CatalogError("Trunc needs k >= 1")
    products = {(i, j): {i + j: 1} for i in range(k) for j in range(k) if i + j < k}
    names = ["1"] + ["eps" if i == 1 else f"eps^{i}" for i in range(1, k)]
    return AlgebraPresentation(f"Trunc({k})", names, [1] + [0] * (k - 1), _table(k, products))


def dual_numbers_over(B: AlgebraPresentation) -> AlgebraPresentation:
    """``B (x) Q[eps]/(eps^2)``: B with a central square-zero element adjoined."""
    return tensor_product(B, truncated_polynomials(2), name=f"Dual({B.name})")


# -- Example j ----------------------------------------------------------------------

EXAMPLE_J_BASIS = ("1", "x", "y", "z", "t", "tx", "ty", "tz")
_EXAMPLE_J_WORDS = ((), ("x",), ("y",), ("x", "y"), ("t",), ("t", "x"), ("t", "y"), ("t", "x", "y"))


def _rewrite_step(word):
    """One rewriting step, or None if ``word`` is a normal form.

    Rules: xx -> -1, yy -> -1, yx -> t - xy, t moves to the front, tt -> 0.
    Normal forms are t^a x^b y^c with a, b, c in {0, 1}.
    """
    for p in range(len(word) - 1):
        pair = word[p:p + 2]
        head, tail = word[:p], word[p + 2:]
        if pair == ("x", "x") or pair == ("y", "y"):
            return {head + tail: -F1}
        if pair == ("y", "x"):
            return {("t",) + head + tail: F1, head + ("x", "y") + tail: -F1}
        if pair == ("t", "t"):
            return {}
        if pair[1] == "t":
            return {("t",) + head + (pair[0],) + tail: F1}
    return None


def reduce_word(word) -> dict:
    """Normal form of a word in x, y, t as ``{normal_word: coefficient}``."""
    pending = {tuple(word): F1}
    done: dict = {}
    while pending:
        w, c = pending.popitem()
        step = _rewrite_step(w)
        if step is None:
            done[w] = done.get(w, F0) + c
            continue
        for w2, c2 in step.items():
            pending[w2] = pending.get(w2, F0) + c * c2
    return {w: c for w, c in done.items() if c}


def example_j() -> AlgebraPresentation:
    """The 8-dimensional algebra Q<X,Y>/(X^2+1, Y^2+1, (X o Y) f (X o Y)).

    Basis 1, x, y, z = xy, t = x o y, tx, ty, tz; t is central with t^2 = 0.
    Constants come from rewriting every product of basis words.
    """
    index = {w: i for i, w in enumerate(_EXAMPLE_J_WORDS)}
    products = {}
    for i, u in enumerate(_EXAMPLE_J_WORDS):
        for j, v in enumerate(_EXAMPLE_J_WORDS):
            normal = reduce_word(u + v)
            products[(i, j)] = {index[w]: c for w, c in normal.items()}
    return AlgebraPresentation("ExampleJ", EXAMPLE_J_BASIS, [1] + [0] * 7, _table(8, products))


# -- catalog expressions ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(-?\d+(?:/\d+)?|[A-Za-z][A-Za-z0-9_]*|[(),])")


def _tokenize(text):
    pos, tokens = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise CatalogError(f"cannot parse catalog expression at {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def _parse(tokens, pos):
    tok = tokens[pos]
    if re.match(r"-?\d", tok):
        return to_rational(tok), pos + 1
    name, pos = tok, pos + 1
    args = []
    if pos < len(tokens) and tokens[pos] == "(":
        pos += 1
        while True:
            arg, pos = _parse(tokens, pos)
            args.append(arg)
            if pos >= len(tokens):
                raise CatalogError("unbalanced parentheses")
            if tokens[pos] == ")":
                pos += 1
                break
            if tokens[pos] != ",":
                raise CatalogError(f"expected ',' got {tokens[pos]!r}")
            pos += 1
    return (name, args), pos


def _int_arg(x, what):
    if not isinstance(x, Fraction) or x.denominator != 1:
        raise CatalogError(f"{what} must be an integer")
    return int(x)


def _algebra_arg(x):
    if isinstance(x, Fraction):
        raise CatalogError("expected an algebra, got a number")
    return _build(x)


def _build(node) -> AlgebraPresentation:
    if isinstance(node, Fraction):
        raise CatalogError("expected an algebra name")
    name, args = node
    key = name.lower()
    if key in ("q", "r") and not args:
        return rationals()
    if key == "cneg" and len(args) == 1:
        return cneg(args[0])
    if key == "quad" and len(args) == 1:
        return quadratic_algebra(args[0])
    if key in ("quat", "h"):
        if not args:
            return quaternion_algebra(-1, -1)
        if len(args) == 2:
            return quaternion_algebra(args[0], args[1])
    if key in ("mat", "tri") and args:
        if len(args) == 1:
            inner, n = rationals(), _int_arg(args[0], "matrix size")
        elif len(args) == 2:
            inner, n = _algebra_arg(args[0]), _int_arg(args[1], "matrix size")
        else:
            raise CatalogError(f"{name} takes (n) or (inner, n)")
        if n < 1:
            raise CatalogError("matrix size must be positive")
        label = f"{n}" if inner.name == "Q" else f"{inner.name},{n}"
        if key == "mat":
            return matrix_algebra(inner, n, name=f"Mat({label})")
        return triangular_algebra(inner, n, name=f"Tri({label})")
    if key == "trunc" and len(args) == 1:
        return truncated_polynomials(_int_arg(args[0], "truncation order"))
    if key == "dual" and len(args) == 1:
        return dual_numbers_over(_algebra_arg(args[0]))
    if key == "prod" and len(args) >= 2:
        parts = [_algebra_arg(a) for a in args]
        A = parts[0]
        for B in parts[1:-1]:
            A = direct_product(A, B)
        return direct_product(A, parts[-1], name="Prod(" + ",".join(p.name for p in parts) + ")")
    if key == "tensor" and len(args) == 2:
        return tensor_product(_algebra_arg(args[0]), _algebra_arg(args[1]))
    if key == "examplej" and not args:
        return example_j()
    raise CatalogError(f"unknown catalog entry {name!r} with {len(args)} argument(s)")


def catalog(name: str, *params) -> AlgebraPresentation:
    """Build and validate a catalog algebra.

    ``catalog("Quat", -1, -1)`` and ``catalog("Quat(-1,-1)")`` are equivalent;
    params may be numbers or catalog expressions.
    """
    if params:
        name = f"{name}(" + ",".join(str(p) for p in params) + ")"
    tokens = _tokenize(name)
    if not tokens:
        raise CatalogError("empty catalog expression")
    node, pos = _parse(tokens, 0)
    if pos != len(tokens):
        raise CatalogError(f"trailing input in catalog expression {name!r}")
    return require_valid(_build(node))


# -- random re-presentation ---------------------------------------------------------


def random_invertible(n: int, rng: random.Random, low: int = -2, high: int = 2) -> QMatrix:
    while True:
        P = QMatrix([[Fraction(rng.randint(low, high)) for _ in range(n)] for _ in range(n)], n)
        if rank(P) == n:
            return P


def scramble_basis(A: AlgebraPresentation, seed: int):
    """An isomorphic presentation in a random basis whose first vector is the unit.

    Returns ``(B, P)`` where column j of ``P`` holds the old coordinates of the
    j-th new basis vector, so ``change_basis(B, P^-1)`` recovers ``A``.
    """
    rng = random.Random(seed)
    n = A.dim
    while True:
        P = random_invertible(n, rng)
        columns = [A.unit] + [P.column(j) for j in range(1, n)]
        P = QMatrix.from_columns(columns, n)
        if rank(P) == n:
            break
    B = change_basis(A, P, name=f"{A.name}~{seed}")
    return require_valid(B), P
