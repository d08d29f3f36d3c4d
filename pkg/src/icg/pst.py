"""Perfect-state-transfer admissibility as a set predicate.

A divisor set D over n admits PST exactly when n is a multiple of 4 and

    D = D3 u D2 u 2*D2 u 4*D2 u {n / 2^a},   a in {1, 2},

where D3 = {d in D : n/d = 0 (mod 8)} and D2 = {d in D : n/d = 4 (mod 8)}
minus {n/4}.  This module applies the characterization verbatim; no
spectral machinery is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canonical import MAX_PROPER_DIVISORS
from .core import DivisorSet, is_connected, make_instance
from .distance import diameter_of_symbol_mask, symbol_mask
from .errors import DomainError, ResourceLimitError
from .extremal import predict_overall_max
from .numtheory import Factorization, proper_divisors


@dataclass(frozen=True)
class PstDecomposition:
    d3tilde: tuple[int, ...]
    d2: tuple[int, ...]
    two_d2: tuple[int, ...]
    four_d2: tuple[int, ...]
    hub: int  # n / 2^a
    a: int  # 1 or 2

    def parts_union(self) -> set[int]:
        return set(self.d3tilde) | set(self.d2) | set(self.two_d2) | set(self.four_d2) | {self.hub}

    def to_json_obj(self) -> dict:
        return {
            "d3tilde": list(self.d3tilde),
            "d2": list(self.d2),
            "two_d2": list(self.two_d2),
            "four_d2": list(self.four_d2),
            "hub": self.hub,
            "a": self.a,
        }


def pst_admissible(f: Factorization, ds: DivisorSet) -> PstDecomposition | None:
    """Decompose D per the PST characterization, or None if it does not fit.

    When both a = 1 and a = 2 produce valid decompositions, a = 1 is
    reported.
    """
    n = f.n
    if n % 4 != 0:
        return None
    dset = set(ds.divisors)
    d3 = tuple(d for d in ds.divisors if (n // d) % 8 == 0)
    d2 = tuple(d for d in ds.divisors if (n // d) % 8 == 4 and d != n // 4)
    two_d2 = tuple(2 * d for d in d2)
    four_d2 = tuple(4 * d for d in d2)
    for a in (1, 2):
        hub = n >> a
        if hub not in dset:
            continue
        union = set(d3) | set(d2) | set(two_d2) | set(four_d2) | {hub}
        if union == dset:
            return PstDecomposition(d3, d2, two_d2, four_d2, hub, a)
    return None


def enumerate_pst_sets(
    f: Factorization, max_size: int | None = None, max_divisors: int = MAX_PROPER_DIVISORS
) -> list[tuple[DivisorSet, PstDecomposition]]:
    """All PST-admissible divisor sets of n, optionally capped in cardinality."""
    n = f.n
    if n % 4 != 0:
        return []
    divisors = proper_divisors(n)
    if len(divisors) > max_divisors:
        raise ResourceLimitError(
            f"n={n} has {len(divisors)} proper divisors, cap is {max_divisors}"
        )
    top = len(divisors) if max_size is None else min(max_size, len(divisors))
    out = []
    for size in range(1, top + 1):
        for combo in combinations(divisors, size):
            ds = DivisorSet(n, combo)
            dec = pst_admissible(f, ds)
            if dec is not None:
                out.append((ds, dec))
    return out


def pst_never_maximal(f: Factorization, max_divisors: int = MAX_PROPER_DIVISORS) -> bool:
    """Exhaustive check that no PST-admissible D with |D| <= k attains the
    overall maximal diameter of its order."""
    if f.n % 4 != 0:
        raise DomainError(f"pst_never_maximal requires n in 4N, got {f.n}")
    bound = predict_overall_max(f).value
    for ds, _dec in enumerate_pst_sets(f, max_size=f.k, max_divisors=max_divisors):
        if not is_connected(ds):
            continue
        g = make_instance(f.n, ds.divisors)
        if diameter_of_symbol_mask(f.n, symbol_mask(f.n, g.symbol_set)) == bound:
            return False
    return True
