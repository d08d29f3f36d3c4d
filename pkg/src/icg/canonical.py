"""Reduction machinery for the maximal-diameter search.

A connected divisor set D = {d_1, ..., d_t} is in canonical (separated)
form when every divisor d_s has a dedicated prime p of n with p not
dividing d_s but dividing every other member of D, the assignment being
injective.  Maximal-diameter graphs can always be reduced to such sets,
so enumeration over them (plus connectivity-filtered power sets for the
oracle) drives the whole verification harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .core import DivisorSet, make_divisor_set
from .errors import DomainError, ResourceLimitError
from .numtheory import Factorization, factorize, gcd_of, proper_divisors

#: Refuse power-set enumeration when n has more proper divisors than this.
MAX_PROPER_DIVISORS = 20


@dataclass(frozen=True)
class SeparationWitness:
    """Injective assignment divisor -> dedicated prime.

    For each (d, p) pair: p does not divide d, and p divides every other
    divisor of the set.
    """

    assignment: tuple[tuple[int, int], ...]  # ((divisor, prime), ...) divisor-ascending

    def prime_for(self, d: int) -> int:
        for dv, p in self.assignment:
            if dv == d:
                return p
        raise KeyError(d)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for _, p in self.assignment)

    def to_json_obj(self) -> dict:
        return {"assignment": [{"divisor": d, "prime": p} for d, p in self.assignment]}


def _eligible_primes(f: Factorization, divisors: tuple[int, ...]) -> list[list[int]]:
    """For each divisor, the primes of n not dividing it but dividing all others."""
    out = []
    for d in divisors:
        others = [e for e in divisors if e != d]
        out.append(
            [p for p in f.primes if d % p != 0 and all(e % p == 0 for e in others)]
        )
    return out


def iter_witnesses(f: Factorization, ds: DivisorSet) -> Iterator[SeparationWitness]:
    """All injective separation witnesses, in deterministic order.

    Divisors are processed ascending, each trying its eligible primes
    smallest-first; exhaustive backtracking, so the first yielded witness
    assigns each divisor the smallest prime still available.
    """
    divisors = ds.divisors
    eligible = _eligible_primes(f, divisors)

    def backtrack(i: int, used: set[int], acc: list[tuple[int, int]]):
        if i == len(divisors):
            yield SeparationWitness(tuple(acc))
            return
        for p in eligible[i]:
            if p not in used:
                acc.append((divisors[i], p))
                used.add(p)
                yield from backtrack(i + 1, used, acc)
                used.discard(p)
                acc.pop()

    yield from backtrack(0, set(), [])


def separation_witness(f: Factorization, ds: DivisorSet) -> SeparationWitness | None:
    """First separation witness in canonical order, or None if none exists."""
    return next(iter_witnesses(f, ds), None)


def minimal_connected(ds: DivisorSet) -> bool:
    """gcd(D) = 1 while every proper subset has gcd > 1.

    Checking the leave-one-out subsets suffices (gcd is antitone under
    set inclusion); gcd of the empty set is 0, counted as > 1.
    """
    divisors = ds.divisors
    if gcd_of(divisors) != 1:
        return False
    if len(divisors) == 1:
        return True
    return all(
        gcd_of(divisors[:i] + divisors[i + 1 :]) != 1 for i in range(len(divisors))
    )


def _check_divisor_cap(n: int, max_divisors: int) -> tuple[int, ...]:
    divisors = proper_divisors(n)
    if len(divisors) > max_divisors:
        raise ResourceLimitError(
            f"n={n} has {len(divisors)} proper divisors, cap is {max_divisors}"
        )
    return divisors


def enumerate_separated(
    n: int, t: int, max_divisors: int = MAX_PROPER_DIVISORS
) -> list[DivisorSet]:
    """All t-element divisor sets of n admitting a separation witness, ascending."""
    f = factorize(n)
    divisors = _check_divisor_cap(n, max_divisors)
    out = []
    for combo in combinations(divisors, t):
        ds = DivisorSet(n, combo)
        if separation_witness(f, ds) is not None:
            out.append(ds)
    return out


def enumerate_connected(
    n: int, t: int | None = None, max_divisors: int = MAX_PROPER_DIVISORS
) -> list[DivisorSet]:
    """All connected divisor sets of n with |D| = t (or any size if t is None)."""
    divisors = _check_divisor_cap(n, max_divisors)
    sizes = range(1, len(divisors) + 1) if t is None else [t]
    out = []
    for size in sizes:
        for combo in combinations(divisors, size):
            if math.gcd(*combo) == 1:
                out.append(DivisorSet(n, combo))
    return out


def make_separated(n: int, divisors) -> tuple[DivisorSet, SeparationWitness]:
    """Validate a divisor set and require a separation witness for it."""
    ds = make_divisor_set(n, divisors)
    w = separation_witness(factorize(n), ds)
    if w is None:
        raise DomainError(f"divisor set {list(ds.divisors)} of n={n} admits no separation witness")
    return ds, w
