"""Integral circulant graphs: exact diameters and maximal-diameter theory.

An integral circulant graph ICG_n(D) has vertex set Z_n with a, b adjacent
iff gcd(a - b, n) lies in the divisor set D.  This package builds such
graphs, computes exact distances and diameters, predicts maximal diameters
in closed form, and verifies every prediction against a brute-force BFS
oracle.
"""

from .core import DivisorSet, IcgInstance, adjacent, degree, is_connected, make_instance
from .distance import DiameterResult, DistanceProfile, apsp_oracle, bfs_profile, diameter, distance
from .errors import DomainError, IcgError, ResourceLimitError, ValidationError
from .numtheory import (
    CrtSystem,
    Factorization,
    crt_solve,
    euler_phi,
    factorize,
    proper_divisors,
    r_of,
    s_of,
    valuation,
)

__all__ = [
    "CrtSystem",
    "DiameterResult",
    "DistanceProfile",
    "DivisorSet",
    "DomainError",
    "Factorization",
    "IcgError",
    "IcgInstance",
    "ResourceLimitError",
    "ValidationError",
    "adjacent",
    "apsp_oracle",
    "bfs_profile",
    "crt_solve",
    "degree",
    "diameter",
    "distance",
    "euler_phi",
    "factorize",
    "is_connected",
    "make_instance",
    "proper_divisors",
    "r_of",
    "s_of",
    "valuation",
]
