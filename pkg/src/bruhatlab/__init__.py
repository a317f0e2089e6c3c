"""Exact computations with Bruhat intervals, inversion hyperplane arrangements
and parabolic quotients of finite Weyl groups."""

__version__ = "0.1.0"

from .errors import ConfigurationError, DomainError, InvariantViolation, ResourceError
from .poly import IntPolynomial, is_palindromic
from .rootsystem import RootSystem, build_root_system, parse_group, reflect_root
from .weyl import (
    WeylElement,
    canonical_word,
    descents,
    enumerate_group,
    from_word,
    inverse,
    inversion_set,
    longest_element,
    multiply,
    reflection_for_root,
    support,
)
from .bruhat import bruhat_leq, is_rationally_smooth, lower_covers, lower_interval, poincare
from .arrangement import distance_poly, inversion_arrangement, region_poincare

__all__ = [
    "ConfigurationError", "DomainError", "InvariantViolation", "ResourceError",
    "IntPolynomial", "is_palindromic",
    "RootSystem", "build_root_system", "parse_group", "reflect_root",
    "WeylElement", "canonical_word", "descents", "enumerate_group", "from_word", "inverse",
    "inversion_set", "longest_element", "multiply", "reflection_for_root", "support",
    "bruhat_leq", "is_rationally_smooth", "lower_covers", "lower_interval", "poincare",
    "distance_poly", "inversion_arrangement", "region_poincare",
]
