"""JSON reports: every rational is written as a reduced ``p/q`` string."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .algebra import AlgebraPresentation, Element
from .classify import (
    AnticommutingPair,
    ClassifyOutcome,
    ComplexWitness,
    FrobeniusResult,
    IdealCertificate,
    QuaternionWitness,
)
from .exact import QMatrix, Subspace, format_rational
from .lifting import Feasible, Infeasible, LiftResult, NoLiftWitness
from .poly import Poly


@dataclass
class Report:
    command: list
    inputs: dict = field(default_factory=dict)
    outcome: dict = field(default_factory=dict)
    seed: int | None = None
    budget: int | None = None
    exit_code: int = 0
    timing: dict | None = None

    def to_json(self) -> str:
        data = asdict(self)
        if data["timing"] is None:
            del data["timing"]
        return json.dumps(data, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls(**json.loads(text))


def file_digest(path) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def to_jsonable(obj):
    """Recursively convert package values into plain JSON data."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Element):
        return {"coords": obj.coords_str(), "expr": obj.format()}
    if isinstance(obj, Poly):
        return str(obj)
    if isinstance(obj, Subspace):
        return {"dim": obj.dim, "basis": [[format_rational(x) for x in row] for row in obj.basis]}
    if isinstance(obj, QMatrix):
        return [[format_rational(x) for x in row] for row in obj.to_rows()]
    if isinstance(obj, AlgebraPresentation):
        return {"name": obj.name, "dim": obj.dim, "digest": obj.digest()}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, LiftResult):
        return {
            "lifted": to_jsonable(obj.lifted),
            "iterations": obj.iterations,
            "residual_path": list(obj.residual_path),
            "nilpotency_index": obj.nilpotency_index,
        }
    if isinstance(obj, ComplexWitness):
        return {
            "type": "complex_witness",
            "element": to_jsonable(obj.element),
            "minimal_polynomial": str(obj.minimal_polynomial),
            "sturm_sequence": list(obj.sturm_sequence),
            "real_root_count": obj.real_root_count,
        }
    if isinstance(obj, QuaternionWitness):
        return {
            "type": "quaternion_witness",
            "a": to_jsonable(obj.a),
            "b": to_jsonable(obj.b),
            "lambda": format_rational(obj.lam),
            "mu": format_rational(obj.mu),
        }
    if isinstance(obj, AnticommutingPair):
        return {
            "type": "anticommuting_pair",
            "u": to_jsonable(obj.u),
            "v": to_jsonable(obj.v),
            "u_squared": to_jsonable(obj.u * obj.u),
            "v_squared": to_jsonable(obj.v * obj.v),
        }
    if isinstance(obj, IdealCertificate):
        return {
            "type": f"{obj.kind}_ideal_certificate",
            "source": obj.source,
            "dim": obj.dim,
            "generators": to_jsonable(obj.generators),
            "subspace": to_jsonable(obj.subspace),
        }
    if isinstance(obj, ClassifyOutcome):
        return {
            "variant": obj.variant,
            "payload": to_jsonable(obj.payload),
            "budget_used": obj.budget_used,
            "budget": obj.budget,
            "seed": obj.seed,
        }
    if isinstance(obj, FrobeniusResult):
        out = {"kind": obj.kind, "basis": to_jsonable(obj.basis), "evidence": to_jsonable(obj.evidence)}
        if obj.lam is not None:
            out["lambda"] = format_rational(obj.lam)
            out["lambda_square_class"] = obj.lam_class
        if obj.mu is not None:
            out["mu"] = format_rational(obj.mu)
            out["mu_square_class"] = obj.mu_class
        return out
    if isinstance(obj, NoLiftWitness):
        return {
            "algebra": to_jsonable(obj.algebra),
            "ideal": to_jsonable(obj.ideal),
            "element": to_jsonable(obj.element),
            "polynomial": str(obj.polynomial),
            "residue": to_jsonable(obj.residue),
            "proof": obj.proof,
        }
    if isinstance(obj, Feasible):
        return {"result": "feasible", "u": to_jsonable(obj.u), "v": to_jsonable(obj.v),
                "a": to_jsonable(obj.a), "b": to_jsonable(obj.b)}
    if isinstance(obj, Infeasible):
        return {"result": "infeasible", **asdict(obj)}
    raise TypeError(f"no JSON form for {type(obj).__name__}")
