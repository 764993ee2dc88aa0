"""Ding-Helleseth-Martinsen binary sequences and their 2-adic complexity."""

from .adic import ComplexityReport, TheoremVerdict, complexity, determine_exact, scan
from .cyclotomy import CyclotomicTable, build_classes
from .gaussring import GaussPeriodSet, RingElement, gauss_periods
from .ntheory import ConsistencyError, DomainError, PrimeParams, build_params
from .sequence import DhmSequence, build_sequence

__all__ = [
    "ComplexityReport",
    "ConsistencyError",
    "CyclotomicTable",
    "DhmSequence",
    "DomainError",
    "GaussPeriodSet",
    "PrimeParams",
    "RingElement",
    "TheoremVerdict",
    "build_classes",
    "build_params",
    "build_sequence",
    "complexity",
    "determine_exact",
    "gauss_periods",
    "scan",
]
