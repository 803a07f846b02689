"""Exhaustive verification of the law registry on small universes."""

from .engine import (
    BudgetExceeded,
    EnumerationBudget,
    LawReport,
    case_count,
    check_law,
    check_laws,
    find_counterexample,
)
from .enumeration import enumerate_mappings, enumerate_relations, mapping_from_index
from .laws import REGISTRY, Instance, Law, UnknownLawError, Verdict, evaluate, get_law, law_ids

__all__ = [
    "BudgetExceeded",
    "EnumerationBudget",
    "Instance",
    "Law",
    "LawReport",
    "REGISTRY",
    "UnknownLawError",
    "Verdict",
    "case_count",
    "check_law",
    "check_laws",
    "enumerate_mappings",
    "enumerate_relations",
    "evaluate",
    "find_counterexample",
    "get_law",
    "law_ids",
    "mapping_from_index",
]
