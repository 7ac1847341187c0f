"""Exact valuative dynamics of strict germs and their Kato data.

The submodules build on one another: :mod:`numerics` (exact numbers),
:mod:`dualgraph` (resolution lattices), :mod:`valuation` (monomial weights),
:mod:`blowup` (blow-up sequences), :mod:`germdyn` (normal forms) and
:mod:`kato` (Kato data and surfaces).
"""

from .blowup import BlowupSequence, Free, Initial, Satellite, retract, weighted_blowup_divisor
from .dualgraph import DualGraph, Vertex, fundamental_cycle, intersection_matrix, log_discrepancies, quotient_chain
from .germdyn import Class2, Class4, Class6, eigenvaluation, pushforward_weights, topdeg, topdeg_fk
from .kato import (
    KatoDatum,
    classify_surface,
    compose,
    datum_from_class6,
    jacobian_divisor_coeffs,
    jacobian_gap,
    minimal_model,
    quotient_family_datum,
    surface_curves,
)
from .numerics import QuadNumber, hj_expand, hj_value
from .valuation import MonomialWeights, classify, evaluate, evaluate_ideal, log_discrepancy, normalize

__version__ = "0.1.0"

__all__ = [
    "BlowupSequence",
    "Class2",
    "Class4",
    "Class6",
    "DualGraph",
    "Free",
    "Initial",
    "KatoDatum",
    "MonomialWeights",
    "QuadNumber",
    "Satellite",
    "Vertex",
    "classify",
    "classify_surface",
    "compose",
    "datum_from_class6",
    "eigenvaluation",
    "evaluate",
    "evaluate_ideal",
    "fundamental_cycle",
    "hj_expand",
    "hj_value",
    "intersection_matrix",
    "jacobian_divisor_coeffs",
    "jacobian_gap",
    "log_discrepancies",
    "log_discrepancy",
    "minimal_model",
    "normalize",
    "pushforward_weights",
    "quotient_chain",
    "quotient_family_datum",
    "retract",
    "surface_curves",
    "topdeg",
    "topdeg_fk",
    "weighted_blowup_divisor",
]
