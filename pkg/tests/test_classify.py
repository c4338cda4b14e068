import random
from fractions import Fraction

import pytest

from frobalg.algebra import left_ideal_span, minimal_poly_of_element
from frobalg.catalog import catalog, scramble_basis
from frobalg.classify import (
    CERTIFICATE,
    UNKNOWN,
    WITNESS,
    AnticommutingPair,
    QuaternionWitness,
    candidates,
    complete_square,
    find_anticommuting_pair,
    find_complex_witness,
    find_left_ideal_mod4_certificate,
    find_odd_left_ideal_certificate,
    find_quaternion_witness,
    find_two_sided_mod4_certificate,
    frobenius_classify,
    sample_left_ideals,
    square_class,
    verify_ideal_certificate,
)
from frobalg.poly import parse_poly, squarefree_part, sturm_count


def test_candidate_order():
    A = catalog("Prod(Q,Q,Q)")
    first = [c.coords for c in _take(candidates(A, 0), 9)]
    assert first[:3] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert first[3:5] == [(1, 1, 0), (1, -1, 0)]
    assert [c.coords for c in _take(candidates(A, 5), 30)] == [c.coords for c in _take(candidates(A, 5), 30)]


def _take(it, n):
    return [x for _, x in zip(range(n), it)]


def test_complex_witness_on_m2():
    M = catalog("Mat(2)")
    out = find_complex_witness(M)
    assert out.variant == WITNESS
    assert out.payload.element == M.by_name("e12") - M.by_name("e21")
    assert out.payload.minimal_polynomial == parse_poly("X^2+1")
    assert out.payload.verify()


def test_complex_witness_on_cneg():
    A = catalog("Cneg(-1)")
    out = find_complex_witness(A)
    assert out.payload.element == A.by_name("u")


def test_complex_unknown_on_split_algebra():
    out = find_complex_witness(catalog("Prod(Q,Q)"), budget=60)
    assert out.variant == UNKNOWN and out.budget_used == 60


def test_odd_certificates():
    out = find_odd_left_ideal_certificate(catalog("Mat(3)"))
    assert out.variant == CERTIFICATE and out.payload.dim == 3
    out = find_odd_left_ideal_certificate(catalog("Prod(Q,Mat(2))"))
    assert out.variant == CERTIFICATE and out.payload.dim == 1
    out = find_odd_left_ideal_certificate(catalog("Mat(2)"), budget=40)
    assert out.variant == UNKNOWN


def test_quaternion_witnesses():
    H = catalog("Quat(-1,-1)")
    out = find_quaternion_witness(H)
    w = out.payload
    assert (w.a, w.b) == (H.by_name("i"), H.by_name("j"))
    assert w.lam == w.mu == 1
    MC = catalog("Mat(Cneg(-1),2)")
    w = find_quaternion_witness(MC).payload
    assert w.verify()
    assert w.a * w.a == MC.one() * -w.lam and w.a.circ(w.b).is_zero()


def test_mod4_certificates():
    M = catalog("Mat(2)")
    out = find_left_ideal_mod4_certificate(M)
    assert out.variant == CERTIFICATE and out.payload.dim == 2
    assert out.payload.subspace == left_ideal_span(M, list(out.payload.generators))
    out = find_left_ideal_mod4_certificate(catalog("Tri(2)"))
    assert out.variant == CERTIFICATE and out.payload.dim == 1
    assert find_left_ideal_mod4_certificate(catalog("Quat(-1,-1)"), budget=40).variant == UNKNOWN


def test_anticommuting_pairs():
    M = catalog("Mat(2)")
    out = find_anticommuting_pair(M)
    p = out.payload
    assert isinstance(p, AnticommutingPair) and p.verify()
    assert p.u * p.u == -M.one() and p.v * p.v == M.one()
    H = catalog("Quat(-1,-1)")
    p = find_anticommuting_pair(H).payload
    assert p.u.circ(p.v).is_zero()
    out = find_anticommuting_pair(catalog("Q"), budget=20)
    assert out.variant == CERTIFICATE and out.payload.dim == 1


def test_two_sided_sampling_on_m2():
    M = catalog("Mat(2)")
    dims = {c.dim for c in _take(sample_left_ideals(M, 3, two_sided=True), 100)}
    assert dims <= {0, 4}
    assert find_two_sided_mod4_certificate(M, budget=60).variant == UNKNOWN


def test_complete_square():
    A = catalog("Cneg(-1)")
    b = A.element([1, 2])  # (b - 1)^2 = -4
    a, lam = complete_square(b)
    assert a == A.element([0, 2]) and lam == 4
    assert complete_square(A.one()) is None


COMPOSITES = ["Mat(2)", "Mat(3)", "Prod(Q,Mat(2))", "Tri(2)", "Cneg(-1)", "Quat(-1,-1)",
              "Prod(Cneg(-1),Q)", "Mat(Cneg(-1),2)", "Prod(Q,Q,Q)", "Dual(Cneg(-2))"]


@pytest.mark.parametrize("seed", range(50))
def test_witness_and_odd_certificate_never_coexist(seed):
    A, _ = scramble_basis(catalog(COMPOSITES[seed % len(COMPOSITES)]), seed)
    w = find_complex_witness(A, budget=40, seed=seed)
    c = find_odd_left_ideal_certificate(A, budget=40, seed=seed)
    assert not (w.found and c.found)
    if w.found:
        assert w.payload.verify()
    if c.found:
        assert verify_ideal_certificate(A, c.payload)


@pytest.mark.parametrize("expr", ["Quat(-1,-1)", "Mat(Cneg(-1),2)", "Quat(-2,-3)"])
def test_quaternion_witness_forces_mod4_left_ideals(expr):
    A = catalog(expr)
    assert find_quaternion_witness(A).variant == WITNESS
    dims = [c.dim for c in _take(sample_left_ideals(A, 1), 100)]
    assert all(d % 4 == 0 for d in dims)


@pytest.mark.parametrize("expr", ["Q", "Tri(2)", "Tri(5)", "Prod(Q,Tri(3))", "Prod(Q,Q,Q)", "Mat(3)", "Trunc(3)"])
def test_odd_dimensional_algebras_have_real_spectrum(expr):
    A = catalog(expr)
    assert A.dim % 2 == 1
    rng = random.Random(expr)
    for _ in range(100):
        a = A.element([rng.randint(-3, 3) for _ in range(A.dim)])
        assert sturm_count(squarefree_part(minimal_poly_of_element(a))) >= 1


SCRAMBLE_CASES = [
    ("Quat(-1,-1)", find_quaternion_witness),
    ("Mat(2)", find_complex_witness),
    ("Mat(2)", find_left_ideal_mod4_certificate),
    ("Cneg(-2)", find_complex_witness),
    ("Tri(2)", find_odd_left_ideal_certificate),
    ("Mat(3)", find_odd_left_ideal_certificate),
]


@pytest.mark.parametrize("expr, search", SCRAMBLE_CASES)
def test_scramble_invariance(expr, search):
    A = catalog(expr)
    base = search(A, budget=200, seed=0).found
    for s in range(20):
        B, _ = scramble_basis(A, s)
        assert search(B, budget=200, seed=0).found == base


def test_square_class():
    assert square_class(Fraction(8)) == 2
    assert square_class(Fraction(-7, 4)) == -7
    assert square_class(Fraction(1, 3)) == 3


def test_frobenius_examples():
    assert frobenius_classify(catalog("Q")).kind == "R"
    r = frobenius_classify(catalog("Cneg(-2)"))
    assert r.kind == "C" and r.lam == 2
    r = frobenius_classify(catalog("Quad(2)"))
    assert r.kind == "NotRealDivision"
    assert r.evidence
    B, _ = scramble_basis(catalog("Quat(-1,-1)"), 7)
    r = frobenius_classify(B)
    assert r.kind == "H"
    one, a, v, av = r.basis
    assert one == B.one()
    assert a * a == B.one() * -r.lam and v * v == B.one() * -r.mu
    assert a.circ(v).is_zero() and av == a * v and av * av == B.one() * -(r.lam * r.mu)


def test_example_j_complement_pair():
    A = catalog("ExampleJ")
    x, y = A.by_name("x"), A.by_name("y")
    assert QuaternionWitness(x, (y * x - x * y) / 2, Fraction(1), Fraction(1)).verify()
