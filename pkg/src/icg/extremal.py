"""Closed-form maximal-diameter theory for integral circulant graphs.

For n = p_1^a_1 ... p_k^a_k define

    r(n) = k + #{i : a_i > 1}      s(n) = #{i : a_i = 1}.

Over all connected divisor sets of order n the maximal diameter is r(n),
or r(n)+1 when n = 2 (mod 4); fixing the divisor-set cardinality t <= k
refines this into a seven-branch case split on (parity of n, s(n), t).
This module implements those predictions, the predicates characterizing
which divisor sets attain them, the CRT worst-vertex constructions, the
two/three-summand representation lemma, the diameter behaviour under
coprime order extension, and the tight 2k+1 family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .canonical import SeparationWitness, iter_witnesses, separation_witness
from .core import DivisorSet, make_divisor_set, make_instance
from .errors import DomainError
from .numtheory import (
    CrtSystem,
    Factorization,
    crt_solve,
    factorize,
    proper_divisors,
    r_of,
    s_of,
    valuation,
)


class CaseLabel(str, Enum):
    T_EQ_K = "T_EQ_K"
    R_PLUS_1 = "R_PLUS_1"
    R_CASE = "R_CASE"
    TWO_T_PLUS_1_BIG_S = "TWO_T_PLUS_1_BIG_S"
    TWO_T_BIG_S = "TWO_T_BIG_S"
    TWO_T_PLUS_1_SMALL_S = "TWO_T_PLUS_1_SMALL_S"
    TWO_T_SMALL_S = "TWO_T_SMALL_S"
    OVERALL_R = "OVERALL_R"
    OVERALL_R_PLUS_1 = "OVERALL_R_PLUS_1"


@dataclass(frozen=True)
class MaxDiameterPrediction:
    value: int
    case_label: CaseLabel
    applicable: bool = True

    def to_json_obj(self) -> dict:
        return {
            "value": self.value,
            "case_label": self.case_label.value,
            "applicable": self.applicable,
        }


@dataclass(frozen=True)
class ExtremalVerdict:
    attains: bool
    matched_condition: str | None = None

    def to_json_obj(self) -> dict:
        return {"attains": self.attains, "matched_condition": self.matched_condition}


@dataclass(frozen=True)
class UntouchedPrimeVerdict:
    """Verdict for divisor sets leaving at least one prime of n untouched."""

    attains: bool  # attains r(n) for the full order n
    matched_condition: str | None
    attains_two_t_plus_one: bool  # attains 2|D|+1 (even untouched part)
    touched: int  # product of prime powers dividing some divisor
    untouched: int  # complementary coprime part
    attains_two_t: bool = False  # attains 2|D| (odd order)

    def to_json_obj(self) -> dict:
        return {
            "attains": self.attains,
            "matched_condition": self.matched_condition,
            "attains_two_t_plus_one": self.attains_two_t_plus_one,
            "attains_two_t": self.attains_two_t,
            "touched": self.touched,
            "untouched": self.untouched,
        }


@dataclass(frozen=True)
class SummandRepresentation:
    """l = d*(y_1 + y_2 [+ 1]) (mod n) with gcd(d*y_i, n) = d."""

    d: int
    l: int
    parts: tuple[int, ...]
    plus_one: bool

    def to_json_obj(self) -> dict:
        return {"d": self.d, "l": self.l, "parts": list(self.parts), "plus_one": self.plus_one}


def predict_overall_max(f: Factorization) -> MaxDiameterPrediction:
    """Maximal diameter over ALL connected divisor sets of order n.

    r(n)+1 when n = 2 (mod 4) and s(n) >= 2, else r(n).  The s(n) <= 1
    proviso matters: for n = 2 * (odd square part) no cardinality branch
    exceeds r(n), and the r(n)+1 value is unattainable.  It also covers
    the degenerate n = 2 (K_2, diameter 1 = r(2)).
    """
    if f.n % 4 == 2 and s_of(f) >= 2:
        return MaxDiameterPrediction(r_of(f) + 1, CaseLabel.OVERALL_R_PLUS_1)
    return MaxDiameterPrediction(r_of(f), CaseLabel.OVERALL_R)


def predict_max_for_t(f: Factorization, t: int) -> MaxDiameterPrediction:
    """Maximal diameter over connected divisor sets of cardinality t.

    Seven-branch case split on (n mod 4, s(n), t vs k - floor(s/2)).  For
    t > k only the overall bound applies; returned with applicable=False.
    """
    if t < 1:
        raise DomainError(f"cardinality must be >= 1, got {t}")
    k = f.k
    if t > k:
        overall = predict_overall_max(f)
        return MaxDiameterPrediction(overall.value, overall.case_label, applicable=False)
    if t == k:
        return MaxDiameterPrediction(r_of(f), CaseLabel.T_EQ_K)
    n, r, s = f.n, r_of(f), s_of(f)
    if s >= 2 and k - s // 2 <= t:
        if n % 4 == 2:
            return MaxDiameterPrediction(r + 1, CaseLabel.R_PLUS_1)
        return MaxDiameterPrediction(r, CaseLabel.R_CASE)
    if s >= 2:  # t < k - s//2
        if n % 2 == 0:
            return MaxDiameterPrediction(2 * t + 1, CaseLabel.TWO_T_PLUS_1_BIG_S)
        return MaxDiameterPrediction(2 * t, CaseLabel.TWO_T_BIG_S)
    if n % 2 == 0:
        return MaxDiameterPrediction(2 * t + 1, CaseLabel.TWO_T_PLUS_1_SMALL_S)
    return MaxDiameterPrediction(2 * t, CaseLabel.TWO_T_SMALL_S)


def _paired_divisor(w: SeparationWitness, p: int) -> int | None:
    for d, q in w.assignment:
        if q == p:
            return d
    return None


def _condition_i_holds(f: Factorization, ds: DivisorSet, w: SeparationWitness) -> bool:
    """For every witness prime p with exponent > 1, every divisor other than
    its dedicated one is divisible by p**2."""
    for p, a in f.factors:
        if a <= 1:
            continue
        dp = _paired_divisor(w, p)
        if dp is None:
            continue
        for d in ds.divisors:
            if d != dp and valuation(p, d) <= 1:
                return False
    return True


def _condition_ii_holds(f: Factorization, ds: DivisorSet, w: SeparationWitness) -> bool:
    if f.n % 4 != 2:
        return False
    d1 = _paired_divisor(w, 2)
    if d1 is None:
        return False
    # exactly one odd prime exactly dividing d1
    sharp = [p for p in f.primes if p != 2 and valuation(p, d1) == 1]
    if len(sharp) != 1:
        return False
    pj = sharp[0]
    dj = _paired_divisor(w, pj)
    for d in ds.divisors:
        if d not in (d1, dj) and valuation(pj, d) <= 1:
            return False
    # every other prime with exponent > 1 must square-divide all divisors
    # except its dedicated one
    for p, a in f.factors:
        if p == pj or a <= 1:
            continue
        dp = _paired_divisor(w, p)
        for d in ds.divisors:
            if d != dp and valuation(p, d) <= 1:
                return False
    return True


def extremal_check_t_eq_k(
    f: Factorization, ds: DivisorSet, w: SeparationWitness
) -> ExtremalVerdict:
    """Does a full-cardinality separated set attain diameter r(n)?"""
    if len(ds.divisors) != f.k:
        raise DomainError(
            f"extremal_check_t_eq_k requires |D| = k = {f.k}, got {len(ds.divisors)}"
        )
    if _condition_i_holds(f, ds, w):
        return ExtremalVerdict(True, "thm:r(n) i")
    if _condition_ii_holds(f, ds, w):
        return ExtremalVerdict(True, "thm:r(n) ii")
    return ExtremalVerdict(False)


def _injection_condition(f: Factorization, ds: DivisorSet, w: SeparationWitness) -> bool:
    """Cases with t < k and the r(n)/r(n)+1 bound: all witness primes odd,
    the condition-i square-divisibility over witness primes, and each
    non-witness prime missing exactly one divisor, the pairing of
    non-witness primes to those divisors being injective between primes of
    exponent 1 on both sides."""
    witness_primes = set(w.primes)
    if 2 in witness_primes:
        return False
    if not _condition_i_holds(f, ds, w):
        return False
    targets = []
    for p, a in f.factors:
        if p in witness_primes:
            continue
        if a != 1:
            return False
        missing = [d for d in ds.divisors if d % p != 0]
        if len(missing) != 1:
            return False
        d = missing[0]
        q = w.prime_for(d)
        if valuation(q, f.n) != 1:
            return False
        targets.append(d)
    return len(targets) == len(set(targets))


def _square_pair_condition(
    f: Factorization, ds: DivisorSet, w: SeparationWitness, odd_only: bool
) -> bool:
    """Cases with the 2t/2t+1 bound: each witness prime square-divides every
    divisor except its dedicated one (odd witness primes required when the
    order is even)."""
    if odd_only and 2 in set(w.primes):
        return False
    for d, p in w.assignment:
        for e in ds.divisors:
            if e != d and valuation(p, e) <= 1:
                return False
    return True


def extremal_check_t_lt_k(
    f: Factorization, ds: DivisorSet, w: SeparationWitness
) -> ExtremalVerdict:
    """Which of the four t < k cases applies, and is its bound attained?

    Standing hypothesis: every prime of n divides at least one divisor
    (otherwise the caller must take the untouched-prime route).  Existence
    conditions quantify over the choice of dedicated primes, so every valid
    witness is tried, not only the one supplied.
    """
    t = len(ds.divisors)
    if t >= f.k:
        raise DomainError(f"extremal_check_t_lt_k requires |D| < k = {f.k}")
    n, s = f.n, s_of(f)
    untouched = [p for p in f.primes if all(d % p != 0 for d in ds.divisors)]
    if s >= 2 and n % 4 != 2:
        case, check = "thm:t<k i", _injection_condition
    elif s >= 2:  # n = 2 (mod 4)
        case, check = "thm:t<k ii", _injection_condition
    elif n % 2 == 1:
        case = "thm:t<k iii"
        check = lambda f_, ds_, w_: _square_pair_condition(f_, ds_, w_, odd_only=False)
    else:
        case = "thm:t<k iv"
        check = lambda f_, ds_, w_: _square_pair_condition(f_, ds_, w_, odd_only=True)
    if untouched:
        # The injection cases need every prime of n to touch some divisor.
        # The square-pair cases reduce to the touched part: split off the
        # untouched prime powers and test the condition over what remains.
        if check is _injection_condition:
            raise DomainError(
                f"primes {untouched} divide no divisor; use check_untouched_prime"
            )
        v = check_untouched_prime(f, ds)
        if n % 2 == 0:
            return ExtremalVerdict(v.attains_two_t_plus_one, case if v.attains_two_t_plus_one else None)
        return ExtremalVerdict(v.attains_two_t, case if v.attains_two_t else None)
    for cand in iter_witnesses(f, ds):
        if check(f, ds, cand):
            return ExtremalVerdict(True, case)
    return ExtremalVerdict(False)


def check_untouched_prime(f: Factorization, ds: DivisorSet) -> UntouchedPrimeVerdict:
    """Divisor sets leaving some prime power of n untouched.

    Split n = m * n' with n' the product of the untouched prime powers.
    The set attains r(n) exactly when n' = 2, m is odd and the divisors
    attain r(m) through the square-divisibility condition; it attains
    2|D|+1 exactly when n' is even and some witness over m has every
    witness prime square-dividing all non-dedicated divisors.
    """
    untouched = [
        (p, a) for p, a in f.factors if all(d % p != 0 for d in ds.divisors)
    ]
    if not untouched:
        raise DomainError("every prime of n divides some divisor; nothing untouched")
    n_prime = 1
    for p, a in untouched:
        n_prime *= p**a
    m = f.n // n_prime
    if m == 1:
        # D = {1}: the square-pair condition over the (empty) touched part
        # holds vacuously, so attainment is decided by the parity of n'.
        # Needs at least two primes; for prime powers the 2t/2t+1 branch of
        # the cardinality formula does not exist.
        if f.k < 2:
            return UntouchedPrimeVerdict(False, None, False, m, n_prime)
        even = n_prime % 2 == 0
        return UntouchedPrimeVerdict(False, None, even, m, n_prime, not even)
    fm = factorize(m)
    if len(ds.divisors) != fm.k:
        return UntouchedPrimeVerdict(False, None, False, m, n_prime)
    ds_m = DivisorSet(m, ds.divisors) if all(m % d == 0 and d < m for d in ds.divisors) else None
    if ds_m is None:
        return UntouchedPrimeVerdict(False, None, False, m, n_prime)
    attains_r = False
    attains_2t1 = False
    attains_2t = False
    for w in iter_witnesses(fm, ds_m):
        if not attains_r and n_prime == 2 and m % 2 == 1 and _condition_i_holds(fm, ds_m, w):
            attains_r = True
        if not attains_2t1 and n_prime % 2 == 0 and _square_pair_condition(
            fm, ds_m, w, odd_only=False
        ):
            attains_2t1 = True
        if not attains_2t and n_prime % 2 == 1 and _square_pair_condition(
            fm, ds_m, w, odd_only=False
        ):
            attains_2t = True
        if attains_r and (attains_2t1 or attains_2t):
            break
    return UntouchedPrimeVerdict(
        attains_r, "thm:main" if attains_r else None, attains_2t1, m, n_prime, attains_2t
    )


def small_family_lookup(f: Factorization) -> list[tuple[DivisorSet, int]]:
    """Concrete small families with known extremal diameter.

    Matches n against the five templates; returns the listed divisor sets
    with their exact diameter (r(n), or r(n)+1 for n = 2*p).  Empty when
    no template matches.
    """
    n = f.n
    primes, exps = f.primes, f.exponents
    r = r_of(f)
    out: list[tuple[DivisorSet, int]] = []
    if f.k == 2 and exps == (1, 1) and primes[0] != 2:
        # n = p1 * p2 odd
        out.append((make_divisor_set(n, [1]), r))
    elif f.k == 2 and primes[0] == 2 and exps == (2, 1):
        # n = 4 * p2
        out.append((make_divisor_set(n, [1]), r))
    elif f.k == 3 and primes[0] == 2 and exps == (1, 1, 1):
        # n = 2 * p2 * p3
        p2, p3 = primes[1], primes[2]
        for d in ([1], [1, p2], [2, p2], [p2, p3], [1, p2, p3]):
            out.append((make_divisor_set(n, d), r))
    elif f.k == 2 and primes[0] == 2 and exps == (1, 2):
        # n = 2 * p2^2
        p2 = primes[1]
        out.append((make_divisor_set(n, [1]), r))
        out.append((make_divisor_set(n, [1, p2]), r))
    elif f.k == 2 and primes[0] == 2 and exps == (1, 1):
        # n = 2 * p2
        out.append((make_divisor_set(n, [1]), r + 1))
    return out


def worst_vertex(
    f: Factorization, ds: DivisorSet, w: SeparationWitness, variant: str = "I"
) -> int:
    """CRT-constructed vertex at distance r(n) from 0.

    Variant I:  l0 = -1 (mod p) for exponent-1 primes, l0 = p (mod p^a)
    otherwise.  Variant II replaces the congruence at the unique odd prime
    exactly dividing the divisor dedicated to 2 with l0 = p^2 (mod p^a).
    """
    if variant not in ("I", "II"):
        raise DomainError(f"variant must be 'I' or 'II', got {variant!r}")
    special: int | None = None
    if variant == "II":
        d1 = _paired_divisor(w, 2)
        if d1 is None:
            raise DomainError("variant II requires a divisor dedicated to the prime 2")
        sharp = [p for p in f.primes if p != 2 and valuation(p, d1) == 1]
        if len(sharp) != 1:
            raise DomainError(
                f"variant II requires exactly one odd prime exactly dividing {d1}, "
                f"found {sharp}"
            )
        special = sharp[0]
    congruences = []
    for p, a in f.factors:
        if p == special:
            congruences.append((p * p % p**a, p**a))
        elif a == 1:
            congruences.append((p - 1, p))
        else:
            congruences.append((p, p**a))
    return crt_solve(CrtSystem(tuple(congruences)))


def two_three_summands(n: int, d: int, l: int) -> SummandRepresentation:
    """Represent l as d*(y1 + y2) or d*(y1 + y2 + 1) mod n with
    gcd(d*y_i, n) = d.

    The +1 form is used exactly when n/d is even and the two-part form has
    no solution (parity: both y_i must then be odd).  Deterministic search:
    smallest y1, then the unique matching y2 residue.
    """
    if n % d != 0:
        raise DomainError(f"{d} does not divide {n}")
    if l % d != 0:
        raise DomainError(f"{d} does not divide target {l}")
    if not 0 <= l < n:
        raise DomainError(f"target must lie in [0, {n}), got {l}")
    q = n // d
    plus_one = q % 2 == 0 and (l // d) % 2 == 1
    target = (l // d - (1 if plus_one else 0)) % q
    for y1 in range(1, q):
        if math.gcd(y1, q) != 1:
            continue
        y2 = (target - y1) % q
        if y2 != 0 and math.gcd(y2, q) == 1:
            return SummandRepresentation(d, l, (y1, y2), plus_one)
    raise DomainError(f"no two-summand representation for n={n}, d={d}, l={l}")


def lift_diameter(m: int, ds: DivisorSet, base_diam: int, n_prime: int) -> int:
    """Diameter of the order-(m*n') graph with the same divisors.

    Exact when base_diam = diam over order m exceeds 2 and gcd(m, n') = 1:
    the diameter grows by one for even n' and is unchanged for odd n'.
    """
    if base_diam <= 2:
        raise DomainError("base diameter must exceed 2; use lift_diameter_small")
    if n_prime <= 1 or math.gcd(m, n_prime) != 1:
        raise DomainError(f"n'={n_prime} must exceed 1 and be coprime to m={m}")
    return base_diam + 1 if n_prime % 2 == 0 else base_diam


def lift_diameter_small(m: int, ds: DivisorSet, base_diam: int, n_prime: int) -> int:
    """Order extension when the base diameter is 1 or 2.

    Complete base graph: 2 for odd n', 3 for even n'.  Diameter-2 base:
    odd m keeps 2 for odd n' and becomes 3 for even n'; even m (n'
    necessarily odd) keeps 2 exactly when every nonzero vertex of the base
    graph is the endpoint of some two-edge walk from 0, else 3.
    """
    if base_diam not in (1, 2):
        raise DomainError(f"base diameter must be 1 or 2, got {base_diam}")
    if n_prime <= 1 or math.gcd(m, n_prime) != 1:
        raise DomainError(f"n'={n_prime} must exceed 1 and be coprime to m={m}")
    if base_diam == 1:
        return 2 if n_prime % 2 == 1 else 3
    if m % 2 == 1:
        return 3 if n_prime % 2 == 0 else 2
    # m even, n' odd: constructive two-walk check
    g = make_instance(m, ds.divisors)
    sym = set(g.symbol_set)
    for l in range(1, m):
        if not any((l - s) % m in sym for s in sym):
            return 3
    return 2


def saxena_family(primes) -> tuple[int, DivisorSet, int]:
    """The tight family for the 2k+1 bound: n = 2 * p_1^2 ... p_k^2 with
    D = {m / p_i^2}; its diameter is exactly 2k+1."""
    ps = list(primes)
    if not ps:
        raise DomainError("at least one odd prime is required")
    if len(set(ps)) != len(ps):
        raise DomainError(f"primes must be distinct, got {ps}")
    for p in ps:
        if p == 2:
            raise DomainError("primes must be odd")
        fp = factorize(p)
        if fp.factors != ((p, 1),):
            raise DomainError(f"{p} is not prime")
    m = 1
    for p in ps:
        m *= p * p
    n = 2 * m
    ds = make_divisor_set(n, sorted(m // (p * p) for p in ps))
    return n, ds, 2 * len(ps) + 1


def diameter_two_cases(f: Factorization, ds: DivisorSet) -> bool:
    """True when the diameter is exactly 2 by the lower-bound cases:
    1 in D with n an odd composite or a power of 2, or n = 2^a * m (m > 1
    odd) with both 1 and 2^a in D.  Requires D != D_n."""
    n = f.n
    dset = set(ds.divisors)
    if 1 not in dset:
        raise DomainError("diameter_two_cases requires 1 in D")
    if dset == set(proper_divisors(n)):
        raise DomainError("diameter_two_cases requires D != D_n")
    if f.k == 1:
        prime_power_composite = f.exponents[0] > 1
        return prime_power_composite and (n % 2 == 1 or f.primes[0] == 2)
    if n % 2 == 1:
        return True
    a = f.exponents[0] if f.primes[0] == 2 else 0
    return a >= 1 and 2**a in dset
