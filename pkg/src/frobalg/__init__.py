"""Exact arithmetic toolkit for finite-dimensional algebras over the rationals."""

from .algebra import (
    AlgebraPresentation,
    Element,
    load_algebra,
    loads_algebra,
    quotient,
    validate,
)
from .catalog import catalog, example_j, scramble_basis
from .classify import (
    find_anticommuting_pair,
    find_complex_witness,
    find_left_ideal_mod4_certificate,
    find_odd_left_ideal_certificate,
    find_quaternion_witness,
    find_two_sided_mod4_certificate,
    frobenius_classify,
)
from .exact import QMatrix, Subspace
from .lifting import hensel_lift, inseparable_witness, lift_idempotent, lift_mth_root, quaternion_lift_feasibility
from .poly import Poly, parse_poly
from .structure import jordan_chevalley, nilpotency_index, radical

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation",
    "Element",
    "Poly",
    "QMatrix",
    "Subspace",
    "catalog",
    "example_j",
    "find_anticommuting_pair",
    "find_complex_witness",
    "find_left_ideal_mod4_certificate",
    "find_odd_left_ideal_certificate",
    "find_quaternion_witness",
    "find_two_sided_mod4_certificate",
    "frobenius_classify",
    "hensel_lift",
    "inseparable_witness",
    "jordan_chevalley",
    "lift_idempotent",
    "lift_mth_root",
    "load_algebra",
    "loads_algebra",
    "nilpotency_index",
    "parse_poly",
    "quaternion_lift_feasibility",
    "quotient",
    "radical",
    "scramble_basis",
    "validate",
]
