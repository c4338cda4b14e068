from fractions import Fraction

import pytest

from frobalg.algebra import validate
from frobalg.catalog import EXAMPLE_J_BASIS, catalog, example_j, scramble_basis
from frobalg.errors import CatalogError
from frobalg.exact import QMatrix, rank
from frobalg.structure import radical


@pytest.mark.parametrize(
    "expr, dim",
    [
        ("Q", 1), ("Cneg(-1)", 2), ("Quat(-1,-1)", 4), ("H", 4), ("Mat(3)", 9),
        ("Mat(Cneg(-1),2)", 8), ("Tri(3)", 6), ("Tri(Quat(-1,-1),2)", 12), ("Trunc(3)", 3),
        ("Dual(Cneg(-1))", 4), ("Prod(Q,Mat(2))", 5), ("Tensor(Cneg(-1),Tri(2))", 6), ("ExampleJ", 8),
    ],
)
def test_catalog_dimensions_and_validity(expr, dim):
    A = catalog(expr)
    assert A.dim == dim
    assert validate(A)


def test_positional_params_match_expression():
    assert catalog("Quat", -1, -1).same_constants(catalog("Quat(-1,-1)"))
    assert catalog("Tri", 3).dim == 6


@pytest.mark.parametrize("expr", ["Cneg(1)", "Cneg(0)", "Quat(0,-1)", "Nope", "Mat(0)", "Tri(Q,2", "Mat(2) junk"])
def test_catalog_errors(expr):
    with pytest.raises(CatalogError):
        catalog(expr)


def test_quaternion_table():
    A = catalog("Quat(-2,-3)")
    one, i, j, k = A.basis()
    assert i * i == one * -2 and j * j == one * -3 and k * k == one * -6
    assert i * j == k == -(j * i)
    assert i * k == j * -2 and k * i == j * 2


def test_cneg_unit_squares():
    A = catalog("Cneg(-7)")
    u = A.by_name("u")
    assert u * u == A.one() * -7


def test_scramble_is_valid_and_unit_first():
    for seed in range(5):
        B, P = scramble_basis(catalog("Tri(2)"), seed)
        assert validate(B)
        assert B.unit == (1, 0, 0)


# -- Example j ---------------------------------------------------------------------

def _normal_form(word):
    """Independent rewriting to the basis words: xx=-1, yy=-1, yx=t-xy, t central, tt=0.

    Returns {basis word: coefficient}; words are tuples over 'x', 'y', 't'.
    """
    pending = {tuple(word): Fraction(1)}
    done: dict = {}
    while pending:
        w, c = pending.popitem()
        t_count = w.count("t")
        rest = tuple(ch for ch in w if ch != "t")
        if t_count >= 2:
            continue
        # find the first rewritable adjacent pair in the t-free part
        for pos in range(len(rest) - 1):
            pair = rest[pos:pos + 2]
            head, tail = rest[:pos], rest[pos + 2:]
            prefix = ("t",) * t_count
            if pair in (("x", "x"), ("y", "y")):
                pending[prefix + head + tail] = pending.get(prefix + head + tail, 0) - c
                break
            if pair == ("y", "x"):
                a = ("t",) + prefix + head + tail
                b = prefix + head + ("x", "y") + tail
                pending[a] = pending.get(a, 0) + c
                pending[b] = pending.get(b, 0) - c
                break
        else:
            key = ("t",) * t_count + rest
            done[key] = done.get(key, 0) + c
    return {w: c for w, c in done.items() if c}


WORDS = {(): "1", ("x",): "x", ("y",): "y", ("x", "y"): "z", ("t",): "t",
         ("t", "x"): "tx", ("t", "y"): "ty", ("t", "x", "y"): "tz"}


def test_example_j_table_matches_rewriting_derivation():
    A = example_j()
    assert A.basis_names == EXAMPLE_J_BASIS
    inverse = {v: k for k, v in WORDS.items()}
    for a in EXAMPLE_J_BASIS:
        for b in EXAMPLE_J_BASIS:
            nf = _normal_form(inverse[a] + inverse[b])
            expected = A.zero()
            for w, c in nf.items():
                expected = expected + A.by_name(WORDS[w]) * c
            assert A.by_name(a) * A.by_name(b) == expected, (a, b)


# quaternions over the dual numbers: element = (q0, q1) meaning q0 + eps*q1
def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def _add(p, q):
    return tuple(x + y for x, y in zip(p, q))


def _dmul(p, q):
    return (_qmul(p[0], q[0]), _add(_qmul(p[0], q[1]), _qmul(p[1], q[0])))


def _flat(p):
    return p[0] + p[1]


def test_example_j_matches_dual_quaternion_oracle():
    zero = (0, 0, 0, 0)
    one = ((1, 0, 0, 0), zero)
    X = ((0, 1, 0, 0), zero)  # i
    Y = ((0, 0, 1, 0), (0, 1, 0, 0))  # j + eps*i
    T = _add(_flat(_dmul(X, Y)), _flat(_dmul(Y, X)))
    assert T == (0, 0, 0, 0, -2, 0, 0, 0)
    Tq = ((0, 0, 0, 0), (-2, 0, 0, 0))
    images = {"1": one, "x": X, "y": Y, "z": _dmul(X, Y), "t": Tq}
    images["tx"] = _dmul(Tq, X)
    images["ty"] = _dmul(Tq, Y)
    images["tz"] = _dmul(Tq, images["z"])
    A = example_j()
    vecs = [_flat(images[n]) for n in EXAMPLE_J_BASIS]

    def image_of(coords):
        return tuple(sum(Fraction(c) * v[m] for c, v in zip(coords, vecs)) for m in range(8))

    # the images form a basis
    assert rank(QMatrix(vecs, 8)) == 8
    for a in EXAMPLE_J_BASIS:
        for b in EXAMPLE_J_BASIS:
            lhs = _flat(_dmul(images[a], images[b]))
            assert lhs == image_of((A.by_name(a) * A.by_name(b)).coords), (a, b)


def test_example_j_identities():
    A = example_j()
    x, y, t = A.by_name("x"), A.by_name("y"), A.by_name("t")
    assert x.circ(y) == t
    assert (t * t).is_zero()
    c = (y * x - x * y) / 2
    assert x.circ(c).is_zero()
    assert c * c == -A.one()
    rep = radical(A)
    assert rep.radical.dim == 4 and rep.nilpotency_index == 2
