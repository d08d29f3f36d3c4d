"""Perfect-state-transfer admissibility as a set predicate.

A divisor set D over n admits perfect state transfer exactly when n is
a multiple of 4 and D decomposes as

    D = D3 u D2 u 2*D2 u 4*D2 u {n / 2^a},  a in {1, 2},

where D3 collects the divisors with n/d divisible by 8 and D2 those
with n/d = 4 (mod 8), excluding n/4.  This script enumerates admissible
sets for a few orders and checks how they relate to the maximal
diameter.

Run:  python3 demos/05_pst_admissibility.py
"""

from icg import diameter, make_instance
from icg.core import is_connected, make_divisor_set
from icg.extremal import predict_overall_max
from icg.numtheory import factorize
from icg.pst import enumerate_pst_sets, pst_admissible, pst_never_maximal

for n in (8, 16, 24, 32):
    f = factorize(n)
    found = enumerate_pst_sets(f)
    print(f"n = {n}: {len(found)} admissible divisor sets")
    for ds, dec in found[:6]:
        tag = "connected" if is_connected(ds) else "disconnected"
        print(f"  D = {list(ds.divisors)}  hub n/2^{dec.a} = {dec.hub}  ({tag})")
    print()

# Do admissible sets ever attain the maximal diameter of their order?
# Mostly not, but there are exceptions; n = 24 has two.
for n in (8, 12, 16, 24):
    f = factorize(n)
    never = pst_never_maximal(f)
    print(f"n = {n}: no admissible set attains the overall max? {never}")
    if not never:
        bound = predict_overall_max(f).value
        for ds, _dec in enumerate_pst_sets(f, max_size=f.k):
            if is_connected(ds) and diameter(make_instance(n, ds.divisors)).value == bound:
                print(f"  attaining set: {list(ds.divisors)} with diameter {bound}")
print()

# Membership is a direct decomposition check.
for n, dset in ((8, [1, 2]), (8, [1]), (6, [1, 2]), (12, [1, 3, 6])):
    dec = pst_admissible(factorize(n), make_divisor_set(n, dset))
    print(f"pst_admissible({n}, {dset}) ->", "yes" if dec else "no")
