import random
from fractions import Fraction

import pytest

from casegen import hensel_case, idempotent_case
from frobalg.algebra import eval_poly_at_element
from frobalg.catalog import catalog
from frobalg.errors import NotApplicable, NotNilpotent, NotSeparable, ResidueNotInIdeal
from frobalg.exact import Subspace
from frobalg.lifting import (
    Feasible,
    Infeasible,
    generalized_binomial,
    hensel_lift,
    inseparable_witness,
    lift_idempotent,
    lift_mth_root,
    log2_ceil,
    quaternion_lift_feasibility,
)
from frobalg.poly import parse_poly
from frobalg.structure import polynomial_in, radical


def test_log2_ceil():
    assert [log2_ceil(n) for n in range(1, 10)] == [0, 1, 2, 2, 3, 3, 3, 3, 4]


def test_dual_gaussian_one_step():
    D = catalog("Dual(Cneg(-1))")
    u, eps = D.by_name("u"), D.by_name("eps")
    I = Subspace.span([eps.coords, (u * eps).coords], 4)
    result = hensel_lift(D, I, u + eps, parse_poly("X^2+1"))
    assert result.lifted == u
    assert result.iterations == 1


def test_root_already_exact():
    T = catalog("Tri(2)")
    I = radical(T).radical
    b = T.element([1, 0, 1])
    result = hensel_lift(T, I, b, parse_poly("X^2-X"))
    assert result.lifted == b and result.iterations == 0
    assert result.residual_path == (0,)


def test_triangular_idempotent_example():
    T = catalog("Tri(2)")
    I = radical(T).radical
    b = T.element([1, 1, 1])
    result = hensel_lift(T, I, b, parse_poly("X^2-X"))
    assert result.lifted == T.one() and result.iterations == 1
    assert b * b * 3 - b * b * b * 2 == T.one()
    assert lift_idempotent(T, I, b) == T.one()
    assert lift_idempotent(T, I, T.by_name("e12")) == T.zero()
    e11 = T.by_name("e11")
    assert lift_idempotent(T, I, e11) == e11


def test_hensel_errors():
    T = catalog("Tri(2)")
    I = radical(T).radical
    b = T.element([1, 1, 1])
    with pytest.raises(NotSeparable) as info:
        hensel_lift(T, I, b, parse_poly("(X-1)^2"))
    assert info.value.gcd == parse_poly("X-1")
    with pytest.raises(ResidueNotInIdeal):
        hensel_lift(T, I, T.element([2, 0, 1]), parse_poly("X^2-X"))
    M = catalog("Mat(2)")
    with pytest.raises(NotNilpotent):
        hensel_lift(M, Subspace.full(4), M.one() * 3, parse_poly("X^2-X"))


@pytest.mark.parametrize("seed", range(40))
def test_random_hensel_cases(seed):
    case = hensel_case(seed)
    result = hensel_lift(case.algebra, case.ideal, case.b, case.f)
    a = result.lifted
    assert eval_poly_at_element(case.f, a).is_zero()
    assert case.ideal.contains((a - case.b).coords)
    assert result.iterations <= log2_ceil(result.nilpotency_index)
    assert a * case.b == case.b * a
    assert polynomial_in(case.b, a)


def three_c2_minus_2c3(b):
    path = [b]
    while path[-1] * path[-1] != path[-1]:
        c = path[-1]
        path.append(c * c * 3 - c * c * c * 2)
    return tuple(path)


@pytest.mark.parametrize("seed", range(15))
def test_idempotent_iterates_match_newton(seed):
    case = idempotent_case(seed)
    result = hensel_lift(case.algebra, case.ideal, case.b, case.f)
    assert result.iterates == three_c2_minus_2c3(case.b)
    assert lift_idempotent(case.algebra, case.ideal, case.b) == result.lifted


def test_generalized_binomial():
    assert generalized_binomial(Fraction(-1, 2), 2) == Fraction(3, 8)
    assert generalized_binomial(Fraction(5), 2) == 10
    assert generalized_binomial(Fraction(1, 3), 0) == 1


def test_mth_root_examples():
    A = catalog("Trunc(3)")
    eps = A.by_name("eps")
    I = Subspace.span([eps.coords, (eps * eps).coords], 3)
    assert lift_mth_root(A, I, A.one() + eps, 2, 1) == A.one()
    # exact root stays put
    assert lift_mth_root(A, I, A.one() * -1, 2, 1) == A.one() * -1
    D = catalog("Dual(Cneg(-1))")
    u, e = D.by_name("u"), D.by_name("eps")
    assert lift_mth_root(D, radical(D).radical, u + e, 2, -1) == u
    with pytest.raises(ValueError):
        lift_mth_root(A, I, A.one(), 2, 0)
    with pytest.raises(ResidueNotInIdeal):
        lift_mth_root(A, I, A.one() * 2, 2, 1)


@pytest.mark.parametrize("seed", range(100))
def test_random_mth_roots(seed):
    rng = random.Random(seed)
    k = rng.randint(2, 6)
    A = catalog(f"Trunc({k})")
    I = Subspace.span([A.basis_element(i).coords for i in range(1, k)], k)
    m = rng.randint(1, 5)
    c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    beta = c ** m
    b = A.element([c] + [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(k - 1)])
    a = lift_mth_root(A, I, b, m, beta)
    assert a ** m == A.scalar(beta)
    assert I.contains((a - b).coords)


@pytest.mark.parametrize(
    "text, root, residue",
    [("(X-1)^2", 1, {"e13": 1}), ("X^2*(X-1)", 0, {"e13": -1}), ("(X-1)^2*(X+2)", 1, {"e13": 3})],
)
def test_inseparable_witnesses(text, root, residue):
    f = parse_poly(text)
    w = inseparable_witness(f, root)
    A = w.algebra
    expected = A.zero()
    for name, c in residue.items():
        expected = expected + A.by_name(name) * c
    assert w.residue == expected
    assert w.verify()
    for row in w.ideal.basis:
        assert eval_poly_at_element(f, w.element + A.element(row)) == w.residue
    with pytest.raises(NotSeparable):
        hensel_lift(A, w.ideal, w.element, f)


def test_inseparable_witness_preconditions():
    with pytest.raises(NotApplicable):
        inseparable_witness(parse_poly("X^2+1"), 0)
    with pytest.raises(NotApplicable):
        inseparable_witness(parse_poly("(X-1)^2*(X+2)"), -2)


def test_example_j_feasibility_is_verified():
    A = catalog("ExampleJ")
    I = radical(A).radical
    x, y = A.by_name("x"), A.by_name("y")
    result = quaternion_lift_feasibility(A, I, x, y)
    assert isinstance(result, Feasible)
    a, b = result.a, result.b
    assert a * a == -A.one() and b * b == -A.one()
    assert a.circ(b).is_zero()
    assert I.contains((a - x).coords) and I.contains((b - y).coords)


def test_example_j_desk_solution():
    # hand derivation: u = ty/4, v = tx/4
    A = catalog("ExampleJ")
    x, y = A.by_name("x"), A.by_name("y")
    a = x + A.by_name("ty") / 4
    b = y + A.by_name("tx") / 4
    assert a * a == -A.one() and b * b == -A.one()
    assert a.circ(b).is_zero()


def test_feasibility_trivial_cases():
    H = catalog("Quat(-1,-1)")
    i, j = H.by_name("i"), H.by_name("j")
    result = quaternion_lift_feasibility(H, Subspace.zero(4), i, j)
    assert isinstance(result, Feasible) and result.u.is_zero() and result.v.is_zero()
    M = catalog("Mat(2)")
    x = M.by_name("e12") - M.by_name("e21")
    result = quaternion_lift_feasibility(M, Subspace.zero(4), x, x)
    assert isinstance(result, Infeasible)
    assert result.augmented_rank > result.coefficient_rank


def test_feasibility_needs_square_zero_ideal():
    T = catalog("Tri(3)")
    with pytest.raises(NotApplicable):
        quaternion_lift_feasibility(T, radical(T).radical, T.one(), T.one())
