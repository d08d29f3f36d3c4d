"""Exhaustive verification: closed-form predictions vs the BFS oracle.

For each order n, every connected divisor set (full power set of the proper
divisors) gets a BFS diameter; maxima per cardinality and overall are
compared against the predictions.  Mismatches are first-class records, not
assertion failures: the whole sweep completes, and the caller decides the
exit status.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .canonical import MAX_PROPER_DIVISORS, enumerate_separated
from .core import DivisorSet, make_instance
from .distance import apsp_oracle, diameter_of_symbol_mask
from .errors import ResourceLimitError
from .extremal import MaxDiameterPrediction, predict_max_for_t, predict_overall_max
from .numtheory import factorize, proper_divisors


class Status(str, Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class VerificationRecord:
    n: int
    t: int | None  # None = overall (all cardinalities)
    predicted: MaxDiameterPrediction
    observed_max: int
    witness_set: tuple[int, ...]
    status: Status

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "predicted": self.predicted.to_json_obj(),
            "observed_max": self.observed_max,
            "witness_set": list(self.witness_set),
            "status": self.status.value,
        }

    def to_csv_row(self) -> list:
        return [
            self.n,
            "all" if self.t is None else self.t,
            self.predicted.value,
            self.observed_max,
            self.status.value,
        ]


def _class_masks(n: int, divisors: tuple[int, ...]) -> dict[int, int]:
    masks = {d: 0 for d in divisors}
    for x in range(1, n):
        g = math.gcd(x, n)
        if g in masks:
            masks[g] |= 1 << x
    return masks


def verify_order(n: int, max_divisors: int = MAX_PROPER_DIVISORS) -> list[VerificationRecord]:
    """One record per cardinality t = 1..k plus one overall record."""
    f = factorize(n)
    divisors = proper_divisors(n)
    if len(divisors) > max_divisors:
        raise ResourceLimitError(
            f"n={n} has {len(divisors)} proper divisors, cap is {max_divisors}"
        )
    masks = _class_masks(n, divisors)
    best: dict[int, tuple[int, tuple[int, ...]]] = {}  # t -> (max diam, witness)
    overall: tuple[int, tuple[int, ...]] | None = None
    for size in range(1, len(divisors) + 1):
        for combo in combinations(divisors, size):
            if math.gcd(*combo) != 1:
                continue
            smask = 0
            for d in combo:
                smask |= masks[d]
            diam = diameter_of_symbol_mask(n, smask)
            assert diam is not None  # connected by the gcd filter
            if size not in best or diam > best[size][0]:
                best[size] = (diam, combo)
            if overall is None or diam > overall[0]:
                overall = (diam, combo)
    records = []
    for t in range(1, f.k + 1):
        predicted = predict_max_for_t(f, t)
        observed, witness = best[t]
        status = (
            Status.MATCH
            if predicted.applicable and predicted.value == observed
            else Status.MISMATCH
        )
        records.append(VerificationRecord(n, t, predicted, observed, witness, status))
    predicted = predict_overall_max(f)
    assert overall is not None  # D = {1} is always connected
    observed, witness = overall
    status = Status.MATCH if predicted.value == observed else Status.MISMATCH
    records.append(VerificationRecord(n, None, predicted, observed, witness, status))
    return records


@dataclass(frozen=True)
class RangeReport:
    n_lo: int
    n_hi: int
    records: tuple[VerificationRecord, ...]

    @property
    def mismatches(self) -> tuple[VerificationRecord, ...]:
        return tuple(r for r in self.records if r.status is Status.MISMATCH)

    @property
    def match_count(self) -> int:
        return sum(1 for r in self.records if r.status is Status.MATCH)

    def to_json(self) -> str:
        return json.dumps(
            {
                "range": [self.n_lo, self.n_hi],
                "matches": self.match_count,
                "mismatches": len(self.mismatches),
                "mismatch_details": [r.to_json_obj() for r in self.mismatches],
                "records": [r.to_json_obj() for r in self.records],
            },
            indent=2,
            sort_keys=True,
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "t", "predicted", "observed", "status"])
        for r in self.records:
            writer.writerow(r.to_csv_row())
        return buf.getvalue()


def verify_range(
    n_lo: int,
    n_hi: int,
    jobs: int = 1,
    fail_fast: bool = False,
    max_divisors: int = MAX_PROPER_DIVISORS,
) -> RangeReport:
    """Verify every order in [n_lo, n_hi]; deterministic regardless of jobs."""
    if n_lo < 2 or n_hi < n_lo:
        raise ResourceLimitError(f"invalid range [{n_lo}, {n_hi}]")
    orders = range(n_lo, n_hi + 1)
    records: list[VerificationRecord] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(verify_order, orders, [max_divisors] * len(orders))
            for chunk in chunks:
                records.extend(chunk)
                if fail_fast and any(r.status is Status.MISMATCH for r in chunk):
                    break
    else:
        for n in orders:
            chunk = verify_order(n, max_divisors)
            records.extend(chunk)
            if fail_fast and any(r.status is Status.MISMATCH for r in chunk):
                break
    return RangeReport(n_lo, n_hi, tuple(records))


def verify_transitivity(n_max: int, oracle_bound: int = 5000) -> dict:
    """Constant row eccentricity (vertex transitivity) via the all-pairs
    oracle, over deterministic sample instances for each order."""
    checked = 0
    failures = []
    for n in range(3, n_max + 1):
        divisor_sets = [[1], list(proper_divisors(n))]
        k = factorize(n).k
        if k >= 2:
            separated = enumerate_separated(n, 2)
            if separated:
                divisor_sets.append(list(separated[0].divisors))
        seen = set()
        for divisors in divisor_sets:
            key = tuple(divisors)
            if key in seen:
                continue
            seen.add(key)
            g = make_instance(n, divisors)
            table = apsp_oracle(g, bound=oracle_bound)
            eccs = {
                None if any(d is None for d in row) else max(row) for row in table
            }
            checked += 1
            if len(eccs) != 1:
                failures.append({"n": n, "divisors": divisors})
    return {"checked": checked, "failures": failures, "ok": not failures}
