"""Axiom and principle checkers returning :class:`Verdict` objects."""

from .axioms import check_axiom_consistency, check_axiom_negation, check_contraposition, check_wcp
from .principles import Principle, check_postulates, check_principle
from .verdict import Complement, Verdict, VerdictStatus

__all__ = [
    "Complement",
    "Principle",
    "Verdict",
    "VerdictStatus",
    "check_axiom_consistency",
    "check_axiom_negation",
    "check_contraposition",
    "check_postulates",
    "check_principle",
    "check_wcp",
]
