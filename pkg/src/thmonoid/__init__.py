"""Finite tables between prefix codes, their maximal extensions, and the monoid they form."""
from .core import (
    AlphabetError,
    BudgetExceeded,
    DomainError,
    OrderViolation,
    ParseError,
    RuleNotApplicable,
    ThompsonError,
)
from .hom import Hom, compose, eq_in_M, identity, max_extend, zero

__all__ = [
    "AlphabetError",
    "BudgetExceeded",
    "DomainError",
    "Hom",
    "OrderViolation",
    "ParseError",
    "RuleNotApplicable",
    "ThompsonError",
    "compose",
    "eq_in_M",
    "identity",
    "max_extend",
    "zero",
]
