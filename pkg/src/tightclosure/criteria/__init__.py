"""Closure criteria: rule families, the decision engine and certificate checks."""

from .construct import Construction, ConstructionError, bastel_construct
from .engine import (
    DecisionReport,
    DegreeRow,
    Engine,
    ProfileReport,
    decide,
    decide_element,
    degree_profile,
    exact_sequence_decide,
)
from .model import Caveat, Certificate, DegreeStatus, RuleConflictError, Status, Verdict
from .rules import IdealAnalysis, NotPrimaryError
from .verify import verify_certificate, verify_record

__all__ = [
    "Construction",
    "ConstructionError",
    "bastel_construct",
    "Caveat",
    "Certificate",
    "DecisionReport",
    "DegreeRow",
    "DegreeStatus",
    "Engine",
    "IdealAnalysis",
    "NotPrimaryError",
    "ProfileReport",
    "RuleConflictError",
    "Status",
    "Verdict",
    "decide",
    "decide_element",
    "degree_profile",
    "exact_sequence_decide",
    "verify_certificate",
    "verify_record",
]
