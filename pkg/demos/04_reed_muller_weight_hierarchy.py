"""Projective Reed-Muller codes and their generalized Hamming weights.

Evaluating the reduced degree-d monomials at canonical projective points
gives a generator matrix.  Minimizing the support of an r-dimensional
subcode is the same problem as maximizing common zeros of r forms, so the
weight hierarchy is the mirror image of the point-count table.
"""

from footprint_lab import (brute_force_max_points, build_prm, check_duality,
                           export_generator_csv, ghw_lower_bound, ghw_table)

q, d, m = 3, 2, 2
code = build_prm(d, m, q)
print(f"order-{d} code on the projective plane over F_{q}: "
      f"[{code.n}, {code.k}]")

weights = ghw_table(code)
zeros = tuple(brute_force_max_points(r, d, m, q).value
              for r in range(1, code.k + 1))
floors = tuple(ghw_lower_bound(r, d, m, q) for r in range(1, code.k + 1))
print("weight hierarchy:", weights)
print("zero maxima:     ", zeros)
print("n - zeros:       ", tuple(code.n - z for z in zeros))
print("proven floors:   ", floors)

print("\nduality check per rank:")
for row in check_duality(d, m, q):
    print(f"  r={row['r']}: {row['weight']} + {row['max_zeros']} "
          f"= {row['n']} -> {row['holds']}")

print("\ngenerator matrix, first three rows:")
print("\n".join(export_generator_csv(code).splitlines()[:3]))
