"""Command-line entry point.

Exit codes: 0 success or witness, 1 certificate, 2 invalid algebra,
3 parse or I/O error, 4 inseparable polynomial, 5 residue/ideal error,
6 search budget exhausted, 7 demo verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .algebra import AlgebraPresentation, eval_poly_at_element, load_algebra, validate
from .catalog import catalog
from .classify import (
    CERTIFICATE,
    DEFAULT_BUDGET,
    WITNESS,
    find_anticommuting_pair,
    find_complex_witness,
    find_left_ideal_mod4_certificate,
    find_odd_left_ideal_certificate,
    find_quaternion_witness,
    frobenius_classify,
)
from .demos import DEMOS, run_demo
from .errors import (
    CatalogError,
    DimensionMismatch,
    InvalidAlgebra,
    NotAnIdeal,
    NotNilpotent,
    NotSeparable,
    PolySyntaxError,
    ResidueNotInIdeal,
)
from .exact import Subspace, to_rational
from .lifting import hensel_lift
from .poly import parse_poly
from .report import Report, file_digest, to_jsonable
from .structure import radical

EXIT_OK = 0
EXIT_CERTIFICATE = 1
EXIT_INVALID = 2
EXIT_PARSE = 3
EXIT_INSEPARABLE = 4
EXIT_IDEAL = 5
EXIT_UNKNOWN = 6
EXIT_DEMO_FAILED = 7


class CliError(Exception):
    def __init__(self, code: int, message: str, outcome: dict | None = None):
        super().__init__(message)
        self.code = code
        self.outcome = outcome or {"error": message}


def _load(path) -> AlgebraPresentation:
    try:
        return load_algebra(path)
    except DimensionMismatch as exc:
        raise CliError(EXIT_INVALID, str(exc), {"valid": False, "kind": "ShapeError", "message": str(exc)})
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}")


def _load_valid(path) -> AlgebraPresentation:
    A = _load(path)
    report = validate(A)
    if not report:
        raise CliError(EXIT_INVALID, str(report), _validation_outcome(report))
    return A


def _validation_outcome(report) -> dict:
    if report:
        return {"valid": True}
    return {
        "valid": False,
        "kind": report.kind,
        "triple": list(report.triple),
        "lhs": to_jsonable(list(report.lhs)),
        "rhs": to_jsonable(list(report.rhs)),
        "message": report.message,
    }


def _coords(text: str, dim: int):
    try:
        values = [to_rational(s.strip()) for s in text.split(",")]
    except ValueError as exc:
        raise CliError(EXIT_PARSE, f"bad coordinates {text!r}: {exc}")
    if len(values) != dim:
        raise CliError(EXIT_PARSE, f"expected {dim} coordinates, got {len(values)}")
    return values


def cmd_validate(args):
    A = _load(args.file)
    report = validate(A)
    outcome = {"name": A.name, "dim": A.dim, **_validation_outcome(report)}
    return outcome, EXIT_OK if report else EXIT_INVALID, {"file": file_digest(args.file)}


def cmd_lift(args):
    A = _load_valid(args.file)
    try:
        f = parse_poly(args.poly)
    except PolySyntaxError as exc:
        raise CliError(EXIT_PARSE, str(exc), {"error": str(exc), "position": exc.position})
    b = A.element(_coords(args.element, A.dim))
    if args.ideal == "rad":
        I = radical(A).radical
    else:
        gens = [_coords(part, A.dim) for part in args.ideal.split(";") if part.strip()]
        I = Subspace.span(gens, A.dim)
    try:
        result = hensel_lift(A, I, b, f)
    except NotSeparable as exc:
        raise CliError(EXIT_INSEPARABLE, str(exc), {"error": "NotSeparable", "gcd": str(exc.gcd)})
    except (ResidueNotInIdeal, NotAnIdeal, NotNilpotent) as exc:
        raise CliError(EXIT_IDEAL, str(exc), {"error": type(exc).__name__, "message": str(exc)})
    a = result.lifted
    outcome = {
        "lift": to_jsonable(result),
        "ideal": to_jsonable(I),
        "checks": {
            "f(a) == 0": eval_poly_at_element(f, a).is_zero(),
            "a - b in I": I.contains((a - b).coords),
        },
    }
    inputs = {"file": file_digest(args.file), "poly": str(f), "element": args.element, "ideal": args.ideal}
    return outcome, EXIT_OK, inputs


_SEARCHES = {
    "complex": (find_complex_witness, find_odd_left_ideal_certificate),
    "quaternion": (find_quaternion_witness, find_left_ideal_mod4_certificate),
    "anticommuting": (find_anticommuting_pair, None),
}


def cmd_classify(args):
    A = _load_valid(args.file)
    inputs = {"file": file_digest(args.file), "property": args.property}
    if args.property == "frobenius":
        result = frobenius_classify(A)
        code = EXIT_OK if result.kind != "NotRealDivision" else EXIT_CERTIFICATE
        return {"result": to_jsonable(result)}, code, inputs
    witness_search, certificate_search = _SEARCHES[args.property]
    outcome = witness_search(A, budget=args.budget, seed=args.seed)
    if not outcome.found and certificate_search is not None:
        outcome = certificate_search(A, budget=args.budget, seed=args.seed)
    code = {WITNESS: EXIT_OK, CERTIFICATE: EXIT_CERTIFICATE}.get(outcome.variant, EXIT_UNKNOWN)
    return {"result": to_jsonable(outcome)}, code, inputs


def cmd_demo(args):
    outcome, checks = run_demo(args.name)
    ok = all(checks.values())
    outcome = {"checks": checks, "all_verified": ok, **outcome}
    return outcome, EXIT_OK if ok else EXIT_DEMO_FAILED, {"demo": args.name}


def cmd_catalog(args):
    try:
        A = catalog(args.name, *args.params)
    except (CatalogError, ValueError) as exc:
        raise CliError(EXIT_PARSE, str(exc))
    except InvalidAlgebra as exc:
        raise CliError(EXIT_INVALID, str(exc))
    text = A.dumps()
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(EXIT_PARSE, f"cannot write {args.out}: {exc}")
    outcome = {"name": A.name, "dim": A.dim, "basis": list(A.basis_names), "digest": A.digest()}
    if not args.out:
        outcome["algebra"] = json.loads(text)
    return outcome, EXIT_OK, {"name": args.name, "params": list(args.params)}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print the JSON report")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="include wall-clock timing in the report")

    parser = argparse.ArgumentParser(prog="frobalg", description="Exact finite-dimensional algebra toolkit.")
    parser.add_argument("--json", action="store_true", help="print the JSON report")
    parser.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check unit law and associativity")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("lift", parents=[common], help="Newton-lift a root modulo a nilpotent ideal")
    p.add_argument("file")
    p.add_argument("--poly", required=True, help='polynomial in X, e.g. "X^2-X"')
    p.add_argument("--element", required=True, help="comma-separated rational coordinates")
    p.add_argument("--ideal", default="rad", help='"rad" or generator coordinates separated by ";"')
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("classify", parents=[common], help="search for a witness or a certificate")
    p.add_argument("file")
    p.add_argument("--property", required=True, choices=["complex", "quaternion", "anticommuting", "frobenius"])
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("demo", parents=[common], help="replay a worked construction")
    p.add_argument("name", choices=sorted(DEMOS))
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("catalog", parents=[common], help="write a catalog algebra")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)
    return parser


def _summary(command: str, outcome: dict, code: int) -> str:
    if "error" in outcome:
        lines = [f"error: {outcome.get('message', outcome['error'])}"]
        if "gcd" in outcome:
            lines.append(f"gcd(f, f') = {outcome['gcd']}")
        return "\n".join(lines)
    if command == "validate":
        if outcome["valid"]:
            return f"{outcome['name']}: valid ({outcome['dim']}-dimensional)"
        triple = outcome.get("triple")
        where = f" at basis triple {tuple(triple)}" if triple else ""
        return f"{outcome['kind']}{where}: {outcome['message']}"
    if command == "lift":
        lift = outcome["lift"]
        return (f"lifted {lift['lifted']['coords']} ({lift['lifted']['expr']}) "
                f"in {lift['iterations']} iteration(s); nilpotency index {lift['nilpotency_index']}")
    if command == "catalog":
        return f"{outcome['name']}: {outcome['dim']}-dimensional, sha256 {outcome['digest']}"
    if command == "demo":
        lines = [f"[{'ok' if v else 'FAILED'}] {k}" for k, v in outcome["checks"].items()]
        return "\n".join(lines)
    return json.dumps(outcome["result"], indent=2)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    inputs = {}
    try:
        outcome, code, inputs = args.func(args)
    except CliError as exc:
        outcome, code = exc.outcome, exc.code
        outcome.setdefault("message", str(exc))
    report = Report(
        command=argv,
        inputs=inputs,
        outcome=outcome,
        seed=getattr(args, "seed", None),
        budget=getattr(args, "budget", None),
        exit_code=code,
        timing={"seconds": f"{time.perf_counter() - start:.3f}"} if args.timing else None,
    )
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        stream = sys.stdout if code in (EXIT_OK, EXIT_CERTIFICATE, EXIT_UNKNOWN) else sys.stderr
        print(_summary(args.command, outcome, code), file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
