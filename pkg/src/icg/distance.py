"""Exact distances on integral circulant graphs.

The main BFS works on bitmask frontiers: the set of vertices reached so far
is one Python integer, and expanding a level rotates that integer once per
symbol offset.  That keeps the exhaustive sweeps (thousands of BFS runs per
order) fast without any compiled dependency.

``apsp_oracle`` deliberately uses a plain queue-based BFS per source vertex,
so it is an independent cross-check of the bitmask implementation.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .core import IcgInstance, is_connected
from .errors import DomainError, ResourceLimitError

#: Default cap on n for the all-pairs oracle.
ORACLE_BOUND = 5000

#: The CLI warns when n * |S| exceeds this.
BFS_WORK_WARN = 10**9


@dataclass(frozen=True)
class DistanceProfile:
    """Shortest-path distances from vertex 0; None marks unreachable."""

    n: int
    dist: tuple[int | None, ...]

    def to_json_obj(self) -> dict:
        return {"n": self.n, "dist": list(self.dist)}


@dataclass(frozen=True)
class DiameterResult:
    """Diameter with a deterministic witness.

    value is None for a disconnected graph (infinite diameter); then
    witness_vertex is the smallest unreachable vertex and witness_path
    is None.  Otherwise witness_vertex is the smallest vertex at maximal
    distance and witness_path a shortest path from 0 to it.
    """

    value: int | None
    witness_vertex: int
    witness_path: tuple[int, ...] | None

    def to_json_obj(self) -> dict:
        return {
            "value": self.value,
            "infinite": self.value is None,
            "witness_vertex": self.witness_vertex,
            "witness_path": list(self.witness_path) if self.witness_path is not None else None,
        }


def symbol_mask(n: int, symbols) -> int:
    """Pack a symbol set into a bitmask integer."""
    m = 0
    for s in symbols:
        m |= 1 << s
    return m


def _expand(mask: int, smask: int, n: int, full: int) -> int:
    """Union of mask shifted by every symbol offset (cyclically).

    Convolution trick: rotating the reached-set by each symbol equals
    rotating the symbol mask by each reached vertex; we always rotate the
    smaller description.  Both are computed the same way, so just rotate
    smask by the set bits of mask when mask is sparse, else vice versa.
    """
    out = 0
    a, b = (mask, smask) if mask.bit_count() <= smask.bit_count() else (smask, mask)
    while a:
        low = a & -a
        s = low.bit_length() - 1
        a ^= low
        out |= (b << s) | (b >> (n - s))
    return out & full


def levels_from_zero(n: int, smask: int) -> list[int]:
    """Bitmask of newly reached vertices per BFS level, starting at {0}."""
    full = (1 << n) - 1
    reached = 1
    frontier = 1
    levels = [1]
    while True:
        frontier = _expand(frontier, smask, n, full) & ~reached
        if not frontier:
            return levels
        reached |= frontier
        levels.append(frontier)


def diameter_of_symbol_mask(n: int, smask: int) -> int | None:
    """Diameter given a symbol bitmask; None when not all vertices are reached."""
    levels = levels_from_zero(n, smask)
    reached = 0
    for m in levels:
        reached |= m
    if reached != (1 << n) - 1:
        return None
    return len(levels) - 1


@lru_cache(maxsize=512)
def _profile(g: IcgInstance) -> DistanceProfile:
    n = g.n
    levels = levels_from_zero(n, symbol_mask(n, g.symbol_set))
    dist: list[int | None] = [None] * n
    for d, m in enumerate(levels):
        while m:
            low = m & -m
            dist[low.bit_length() - 1] = d
            m ^= low
    return DistanceProfile(n, tuple(dist))


def bfs_profile(g: IcgInstance) -> DistanceProfile:
    """Exact shortest-path distances from vertex 0 (disconnected allowed)."""
    return _profile(g)


def diameter(g: IcgInstance) -> DiameterResult:
    """Diameter with the smallest witness vertex and one shortest path.

    The reconstructed path is the one a BFS with ascending frontier order
    would record: each step backtracks to the smallest vertex one level
    closer to 0.
    """
    profile = bfs_profile(g)
    if not is_connected(g.divisor_set):
        witness = min(v for v, d in enumerate(profile.dist) if d is None)
        return DiameterResult(None, witness, None)
    value = max(profile.dist)  # type: ignore[type-var]
    witness = min(v for v, d in enumerate(profile.dist) if d == value)
    n = g.n
    sym = set(g.symbol_set)
    path = [witness]
    cur = witness
    for d in range(value - 1, -1, -1):
        cur = min(
            u for u, du in enumerate(profile.dist) if du == d and (cur - u) % n in sym
        )
        path.append(cur)
    return DiameterResult(value, witness, tuple(reversed(path)))


def distance(g: IcgInstance, u: int, v: int) -> int | None:
    """d(u, v) via translation invariance: equals d(0, (v - u) mod n)."""
    n = g.n
    if not (0 <= u < n and 0 <= v < n):
        raise DomainError(f"vertices must lie in [0, {n}), got ({u}, {v})")
    return bfs_profile(g).dist[(v - u) % n]


def apsp_oracle(g: IcgInstance, bound: int = ORACLE_BOUND) -> list[list[int | None]]:
    """All-pairs distances by a plain BFS from every vertex.

    Independent of the bitmask path; used to validate vertex transitivity
    and the translation-invariant ``distance``.
    """
    n = g.n
    if n > bound:
        raise ResourceLimitError(f"apsp_oracle bound exceeded: n={n} > {bound}")
    dset = set(g.divisor_set.divisors)
    offsets = [x for x in range(1, n) if math.gcd(x, n) in dset]
    table: list[list[int | None]] = []
    for src in range(n):
        dist: list[int | None] = [None] * n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for off in offsets:
                v = (u + off) % n
                if dist[v] is None:
                    dist[v] = du + 1
                    queue.append(v)
        table.append(dist)
    return table
