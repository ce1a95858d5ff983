"""Stretched ideals in numerical semigroup rings: exact invariants and checks."""

from .errors import (
    ConstraintViolation,
    InputError,
    InternalInconsistency,
    NotCoprime,
    StretchedError,
)
from .family import FamilyParams, build_family_semigroup, corollary67_params, predicted_report
from .filtration import FiltrationReport, Tower, analyze
from .hilbert import HilbertData, hilbert_data
from .ideal import HIdeal, ideal_from_exponents, maximal_ideal
from .semigroup import NumericalSemigroup, build_semigroup

__all__ = [
    "ConstraintViolation",
    "InputError",
    "InternalInconsistency",
    "NotCoprime",
    "StretchedError",
    "FamilyParams",
    "build_family_semigroup",
    "corollary67_params",
    "predicted_report",
    "FiltrationReport",
    "Tower",
    "analyze",
    "HilbertData",
    "hilbert_data",
    "HIdeal",
    "ideal_from_exponents",
    "maximal_ideal",
    "NumericalSemigroup",
    "build_semigroup",
]
