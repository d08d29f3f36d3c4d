"""The closed-form maximal-diameter theory, checked against BFS.

For n = p_1^a_1 ... p_k^a_k the key quantities are

    r(n) = k + #{i : a_i > 1}      the diameter ceiling
    s(n) = #{i : a_i = 1}

The maximal diameter over all connected divisor sets of cardinality t
is one of 2t, 2t+1, r(n), r(n)+1 depending on (n mod 4, s(n), t).  This
script prints the predictions for a few orders and confirms each one by
brute force over every connected divisor set.

Run:  python3 demos/02_maximal_diameter_theory.py
"""

import math
from itertools import combinations

from icg import diameter, make_instance
from icg.extremal import predict_max_for_t, predict_overall_max
from icg.numtheory import factorize, proper_divisors, r_of, s_of

for n in (30, 60, 90, 105, 540):
    f = factorize(n)
    print(f"n = {n} = {' * '.join(f'{p}^{a}' for p, a in f.factors)}")
    print(f"  r(n) = {r_of(f)}, s(n) = {s_of(f)}, k = {f.k}")
    overall = predict_overall_max(f)
    print(f"  predicted overall max diameter: {overall.value} [{overall.case_label.value}]")
    for t in range(1, f.k + 1):
        pred = predict_max_for_t(f, t)
        print(f"  predicted max for |D| = {t}: {pred.value} [{pred.case_label.value}]")
    print()

# Confirm the order-60 predictions exhaustively.
n = 60
f = factorize(n)
divs = proper_divisors(n)
observed = {}
for size in range(1, len(divs) + 1):
    for combo in combinations(divs, size):
        if math.gcd(*combo) != 1:
            continue
        dv = diameter(make_instance(n, combo)).value
        key = size if size <= f.k else "overall"
        observed[size] = max(observed.get(size, 0), dv)

print(f"order {n}, observed maxima by cardinality (BFS over all connected sets):")
for t in range(1, f.k + 1):
    pred = predict_max_for_t(f, t).value
    print(f"  t = {t}: observed {observed[t]}, predicted {pred}, "
          f"{'ok' if observed[t] == pred else 'MISMATCH'}")
overall_observed = max(observed.values())
print(f"  overall: observed {overall_observed}, predicted {predict_overall_max(f).value}")
