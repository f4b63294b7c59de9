"""Maximum point counts: prediction, exhaustive truth, and witnesses.

For r independent degree-d forms on projective m-space over F_q three
numbers line up: the predicted maximum read off the rank decomposition,
the exhaustive maximum over every r-dimensional system, and the proven
ceiling from the footprint bound.  The witness family attains the
prediction constructively.
"""

from footprint_lab import (binom, brute_force_max_points,
                           conjectured_max_points, construct_witness,
                           count_common_zeros, projective_upper_bound)

q, d, m = 3, 2, 2
top = binom(m + d, d)
print(f"systems of r quadrics on the projective plane over F_{q}:")
print(f"{'r':>3} {'predicted':>10} {'exhaustive':>11} {'ceiling':>8} {'status':>12}")
for r in range(1, top + 1):
    predicted, status = conjectured_max_points(r, d, m, q)
    exact = brute_force_max_points(r, d, m, q).value
    ceiling = projective_upper_bound(r, d, m, q)
    print(f"{r:>3} {predicted:>10} {exact:>11} {ceiling:>8} {status:>12}")

r = 2
res = construct_witness(r, d, m, q)
print(f"\nwitness family for r = {r} (predicted {res.predicted}):")
for poly in res.polys:
    print("   ", poly)
print("common zeros:", count_common_zeros(res.polys, m, q))
