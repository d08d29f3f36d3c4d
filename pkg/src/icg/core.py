"""The graph model: validated divisor sets, ICG instances, adjacency,
degree and connectivity.

Vertices are the residues 0..n-1; two vertices a, b are adjacent exactly
when gcd((a - b) mod n, n) lies in the divisor set D.  The symbol set
(all connection offsets) is materialized eagerly at construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ValidationError
from .numtheory import Factorization, factorize


@dataclass(frozen=True)
class DivisorSet:
    """A validated, ascending set of proper divisors of n."""

    n: int
    divisors: tuple[int, ...]


@dataclass(frozen=True)
class IcgInstance:
    """An integral circulant graph, defined by order n and divisor set D."""

    factorization: Factorization
    divisor_set: DivisorSet
    symbol_set: tuple[int, ...]  # ascending offsets s with gcd(s, n) in D

    @property
    def n(self) -> int:
        return self.factorization.n

    def to_json_obj(self) -> dict:
        return {"n": self.n, "divisors": list(self.divisor_set.divisors)}


def make_divisor_set(n: int, divisors) -> DivisorSet:
    """Validate and canonically order a divisor set over n."""
    if n < 2:
        raise ValidationError(f"order must be >= 2, got {n}")
    ds = list(divisors)
    if not ds:
        raise ValidationError("divisor set must be nonempty")
    bad = [d for d in ds if not isinstance(d, int) or d < 1 or d >= n or n % d != 0]
    if bad:
        raise ValidationError(f"invalid divisors for n={n}: {sorted(set(bad))}")
    if len(set(ds)) != len(ds):
        dupes = sorted({d for d in ds if ds.count(d) > 1})
        raise ValidationError(f"duplicate divisors: {dupes}")
    return DivisorSet(n, tuple(sorted(ds)))


def make_instance(n: int, divisors) -> IcgInstance:
    """Build a validated IcgInstance with its cached symbol set."""
    ds = make_divisor_set(n, divisors)
    dset = set(ds.divisors)
    symbols = tuple(x for x in range(1, n) if math.gcd(x, n) in dset)
    return IcgInstance(factorize(n), ds, symbols)


def adjacent(g: IcgInstance, a: int, b: int) -> bool:
    """True iff gcd((a - b) mod n, n) is a member of D.  adjacent(a, a) is False."""
    n = g.n
    if not (0 <= a < n and 0 <= b < n):
        raise DomainError(f"vertices must lie in [0, {n}), got ({a}, {b})")
    if a == b:
        return False
    return math.gcd((a - b) % n, n) in set(g.divisor_set.divisors)


def is_connected(ds: DivisorSet) -> bool:
    """Connectivity criterion: gcd over all divisors equals 1."""
    return math.gcd(*ds.divisors) == 1


def degree(g: IcgInstance) -> int:
    """Vertex degree; equals the size of the symbol set."""
    return len(g.symbol_set)
