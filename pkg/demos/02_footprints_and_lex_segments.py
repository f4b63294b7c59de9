"""Footprints, level slices, and why lex segments are extremal.

The footprint of a monomial set S at degree e counts the reduced degree-e
monomials no member of S divides; it bounds the zero set of any system
whose leading monomials are S.  The footprint splits by the last variable
used (the level), each slice collapses to a bounded hypercube problem,
and on the hypercube descending-lex segments maximize footprints.
"""

import itertools

from footprint_lab import (footprint, format_monomial, hypercube_footprint,
                           hypercube_lex_segment, hypercube_slice,
                           reduced_monomials, restrict_level, specialize,
                           stable_degree)

q, m, d = 3, 2, 2
estar = stable_degree(d, m, q)
sset = [(1, 1, 0), (0, 0, 2)]
print("S =", [format_monomial(mu) for mu in sset])

for e in (estar, estar + 1):
    slices = [len(footprint(sset, e, q, m, lv)) for lv in range(m + 1)]
    print(f"degree {e}: footprint {len(footprint(sset, e, q, m))} "
          f"= {' + '.join(map(str, slices))} by level")

# each level slice is a hypercube footprint after dropping the level variable
lv = 2
restricted = restrict_level(sset, lv, q)
dropped = specialize(restricted, lv)
print(f"level {lv} slice {len(footprint(sset, estar, q, m, lv))} equals the "
      f"cube footprint {len(hypercube_footprint(dropped, lv, q))} of",
      [format_monomial(mu) for mu in dropped])

# exhaustively: no 3-subset of the bounded square beats the lex segment
pool = hypercube_slice(2, q, d, "at_most")
seg = hypercube_lex_segment(2, q, d, 3, "at_most")
best = max(len(hypercube_footprint(tset, 2, q))
           for tset in itertools.combinations(pool, 3))
print(f"\nbest footprint over all 3-subsets of the bounded square: {best}; "
      f"the lex segment {[format_monomial(t) for t in seg]} "
      f"gives {len(hypercube_footprint(seg, 2, q))}")
