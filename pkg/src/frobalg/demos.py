"""Machine-checked replays of the worked constructions.

Each demo returns ``(outcome, checks)``: a JSON-ready description and a map
from check name to the boolean it actually evaluated to.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import is_invertible, quotient, validate
from .catalog import catalog, scramble_basis
from .classify import QuaternionWitness, frobenius_classify
from .errors import NotSeparable
from .exact import Subspace
from .lifting import (
    Feasible,
    hensel_lift,
    inseparable_witness,
    lift_idempotent,
    lift_mth_root,
    quaternion_lift_feasibility,
)
from .poly import parse_poly
from .report import to_jsonable
from .structure import radical


def demo_frobenius():
    cases = [
        ("Q", "Q", None, "R"),
        ("Cneg(-1)", "Cneg(-1)", None, "C"),
        ("Cneg(-2)", "Cneg(-2)", None, "C"),
        ("Quat(-1,-1) scrambled by seed 7", "Quat(-1,-1)", 7, "H"),
        ("Quat(-2,-3) scrambled by seed 3", "Quat(-2,-3)", 3, "H"),
        ("Quad(2)", "Quad(2)", None, "NotRealDivision"),
        ("Mat(2)", "Mat(2)", None, "NotRealDivision"),
    ]
    outcome, checks = [], {}
    for label, expr, seed, expected in cases:
        A = catalog(expr)
        if seed is not None:
            A, _ = scramble_basis(A, seed)
        result = frobenius_classify(A)
        outcome.append({"algebra": label, "result": to_jsonable(result)})
        checks[f"{label} -> {expected}"] = result.kind == expected
    return {"cases": outcome}, checks


def demo_example_j():
    A = catalog("ExampleJ")
    x, y, t = A.by_name("x"), A.by_name("y"), A.by_name("t")
    one = A.one()
    rep = radical(A)
    I = rep.radical
    Q, pi = quotient(A, I)
    i, j = pi(x), pi(y)
    # complement pair: x and (yx - xy)/2
    c = (y * x - x * y) / 2
    complement = QuaternionWitness(x, c, Fraction(1), Fraction(1))
    feasibility = quaternion_lift_feasibility(A, I, x, y)
    checks = {
        "validate": bool(validate(A)),
        "dim == 8": A.dim == 8,
        "x o y == t": x.circ(y) == t,
        "t^2 == 0": (t * t).is_zero(),
        "t is central": all(t * e == e * t for e in A.basis()),
        "rad dim == 4": I.dim == 4,
        "nilpotency index == 2": rep.nilpotency_index == 2,
        "rad == ideal generated by x o y": I == Subspace.span(
            [(e * t * f).coords for e in A.basis() for f in A.basis()], A.dim
        ),
        "A/rad: i^2 == -1": i * i == -Q.one(),
        "A/rad: j^2 == -1": j * j == -Q.one(),
        "A/rad: i o j == 0": i.circ(j).is_zero(),
        "complement pair x, (yx-xy)/2 verifies with lambda = mu = 1": complement.verify(),
    }
    if isinstance(feasibility, Feasible):
        a, b = feasibility.a, feasibility.b
        checks.update({
            "lift: a^2 == -1": a * a == -one,
            "lift: b^2 == -1": b * b == -one,
            "lift: a o b == 0": a.circ(b).is_zero(),
            "lift: a - x in rad": I.contains((a - x).coords),
            "lift: b - y in rad": I.contains((b - y).coords),
        })
    feasible = isinstance(feasibility, Feasible)
    outcome = {
        "dim": A.dim,
        "radical": to_jsonable(I),
        "nilpotency_index": rep.nilpotency_index,
        "complement_pair": {"a": to_jsonable(x), "b": to_jsonable(c)},
        "lift_feasibility": to_jsonable(feasibility),
        "published_claim": "no a, b with a^2 = b^2 = -1, a o b = 0 and a - x, b - y in I",
        "discrepancy_with_published_claim": feasible,
    }
    return outcome, checks


def demo_inseparable():
    cases = [("(X-1)^2", 1), ("X^2*(X-1)", 0), ("(X-1)^2*(X+2)", 1)]
    outcome, checks = [], {}
    for text, root in cases:
        f = parse_poly(text)
        w = inseparable_witness(f, root)
        checks[f"{text}: f(b) in I, f(b) != 0, f(b+y) == f(b)"] = w.verify()
        try:
            hensel_lift(w.algebra, w.ideal, w.element, f)
            rejected = False
        except NotSeparable:
            rejected = True
        checks[f"{text}: Newton lifting rejects (NotSeparable)"] = rejected
        outcome.append({"polynomial": text, "root": root, "witness": to_jsonable(w)})
    return {"cases": outcome}, checks


def demo_mth_root():
    A = catalog("Trunc(3)")
    eps = A.by_name("eps")
    I = Subspace.span([eps.coords, (eps * eps).coords], A.dim)
    b = A.one() + eps
    a = lift_mth_root(A, I, b, 2, 1)
    D = catalog("Dual(Cneg(-1))")
    u, e = D.by_name("u"), D.by_name("eps")
    J = radical(D).radical
    b2 = u + e
    a2 = lift_mth_root(D, J, b2, 2, -1)
    checks = {
        "Trunc(3): a^2 == 1": a * a == A.one(),
        "Trunc(3): a - b in I": I.contains((a - b).coords),
        "Trunc(3): a == 1": a == A.one(),
        "Dual(Cneg(-1)): a^2 == -1": a2 * a2 == -D.one(),
        "Dual(Cneg(-1)): a - b in I": J.contains((a2 - b2).coords),
        "Dual(Cneg(-1)): a == u": a2 == u,
    }
    outcome = {
        "cases": [
            {"algebra": "Trunc(3)", "m": 2, "beta": "1", "b": to_jsonable(b), "a": to_jsonable(a)},
            {"algebra": "Dual(Cneg(-1))", "m": 2, "beta": "-1", "b": to_jsonable(b2), "a": to_jsonable(a2)},
        ]
    }
    return outcome, checks


def demo_idempotent():
    outcome, checks = [], {}
    T2 = catalog("Tri(2)")
    T4 = catalog("Tri(4)")
    inputs = [
        ("Tri(2)", T2, T2.element([1, 1, 1])),
        ("Tri(4)", T4, T4.by_name("e11") + T4.by_name("e12") + T4.by_name("e33") + T4.by_name("e34") * 2
         + T4.by_name("e14") + T4.by_name("e23") * -1),
        ("Tri(4)", T4, T4.by_name("e22") + T4.by_name("e44") + T4.by_name("e13") + T4.by_name("e24") * 3),
    ]
    for label, A, b in inputs:
        I = radical(A).radical
        e = lift_idempotent(A, I, b)
        path = hensel_lift(A, I, b, parse_poly("X^2-X"))
        key = f"{label} b = {b.format()}"
        checks[f"{key}: c^2 == c"] = e * e == e
        checks[f"{key}: c - b in rad"] = I.contains((e - b).coords)
        checks[f"{key}: matches Newton iterates"] = path.lifted == e
        outcome.append({
            "algebra": label,
            "b": to_jsonable(b),
            "idempotent": to_jsonable(e),
            "iterates": [to_jsonable(c) for c in path.iterates],
        })
    return {"cases": outcome}, checks


def demo_corollary_nil_codim():
    outcome, checks = [], {}
    f = parse_poly("X^2+1")
    for n in (2, 3):
        A = catalog(f"Tri(Cneg(-1),{n})")
        u = sum((A.by_name(f"e{d}{d}*u") for d in range(1, n + 1)), A.zero())
        nil = A.by_name("e12*1")
        if n > 2:
            nil = nil + A.by_name("e23*u") * 2
        b = u + nil
        I = radical(A).radical
        result = hensel_lift(A, I, b, f)
        a = result.lifted
        label = f"Tri(Cneg(-1),{n})"
        checks[f"{label}: a^2 == -1"] = a * a == -A.one()
        checks[f"{label}: a - b in strict upper part"] = I.contains((a - b).coords)
        checks[f"{label}: a - 1 invertible"] = is_invertible(a - 1)
        outcome.append({"algebra": label, "b": to_jsonable(b), "lift": to_jsonable(result)})
    return {"cases": outcome}, checks


DEMOS = {
    "frobenius": demo_frobenius,
    "example-j": demo_example_j,
    "inseparable": demo_inseparable,
    "mth-root": demo_mth_root,
    "idempotent": demo_idempotent,
    "corollary-nil-codim": demo_corollary_nil_codim,
}


def run_demo(name: str):
    try:
        fn = DEMOS[name]
    except KeyError:
        raise KeyError(f"unknown demo {name!r}; choose from {sorted(DEMOS)}") from None
    return fn()
