"""Extremal divisor sets and CRT worst vertices.

A separated divisor set gives every divisor a dedicated prime that
divides all the other divisors.  For such sets, explicit conditions
decide whether the r(n) ceiling is attained, and when it is, a vertex
at maximal distance from 0 can be written down directly by the Chinese
remainder theorem instead of searching.

Run:  python3 demos/03_extremal_sets_and_worst_vertices.py
"""

from icg import diameter, distance, make_instance
from icg.canonical import make_separated
from icg.extremal import extremal_check_t_eq_k, saxena_family, worst_vertex
from icg.numtheory import factorize, r_of

# A full-cardinality separated set over 540 = 2^2 * 3^3 * 5.
n, dset = 540, [45, 20, 108]
f = factorize(n)
ds, w = make_separated(n, dset)
print(f"ICG_{n}({dset})")
print("  separation witness:", dict(w.assignment))
verdict = extremal_check_t_eq_k(f, ds, w)
print(f"  attains r({n}) = {r_of(f)}?", verdict.attains, f"({verdict.matched_condition})")

l0 = worst_vertex(f, ds, w, variant="I")
g = make_instance(n, dset)
print(f"  CRT worst vertex: {l0}, distance from 0: {distance(g, 0, l0)}")
print(f"  BFS diameter: {diameter(g).value}")
print()

# Variant II applies when the divisor dedicated to 2 has exactly one odd
# prime dividing it to the first power.
n, dset = 6750, [75, 250, 18]
f = factorize(n)
ds, w = make_separated(n, dset)
verdict = extremal_check_t_eq_k(f, ds, w)
print(f"ICG_{n}({dset})")
print(f"  attains r({n}) = {r_of(f)}?", verdict.attains, f"({verdict.matched_condition})")
l0 = worst_vertex(f, ds, w, variant="II")
g = make_instance(n, dset)
print(f"  CRT worst vertex (variant II): {l0}, distance from 0: {distance(g, 0, l0)}")
print()

# The tight family for the 2t+1 bound: n = 2 * p_1^2 ... p_k^2 with
# D = {m / p_i^2} has diameter exactly 2k+1.
for primes in ((3,), (3, 5), (3, 5, 7)):
    n, ds, predicted = saxena_family(primes)
    dv = diameter(make_instance(n, ds.divisors)).value
    print(f"tight family over primes {primes}: n = {n}, D = {ds.divisors}, "
          f"predicted {predicted}, BFS {dv}")
