"""Finite fields and projective reduction of monomials.

Every function on F_q^{m+1} is represented by a polynomial whose
exponents are reduced: on projective points the relation x^q = x (away
from 0) lets every exponent before the last used variable be folded into
the range 0..q-1, with the surplus absorbed by the last variable.  This
script builds a couple of fields and shows the reduction acting on
monomials without changing any evaluation.
"""

import itertools

from footprint_lab import (format_monomial, make_field, reduce_monomial)

f4 = make_field(4)
print("F_4 layout: prime", f4.p, "extension degree", f4.e,
      "modulus coefficients", f4.modulus)
print("the two non-prime elements multiply through the modulus:")
for a, b in ((2, 2), (2, 3), (3, 3)):
    print(f"  {a} * {b} = {f4.mul(a, b)}")

q = 3
f3 = make_field(q)
mon = (5, 0, 2)
red = reduce_monomial(mon, q)
print(f"\nover F_{q}: {format_monomial(mon)} reduces to {format_monomial(red)}")

agree = all(
    f3.mul(f3.pow(pt[0], mon[0]), f3.pow(pt[2], mon[2]))
    == f3.mul(f3.pow(pt[0], red[0]), f3.pow(pt[2], red[2]))
    for pt in itertools.product(range(q), repeat=3))
print("evaluations agree at all", q ** 3, "points:", agree)

# reduction can merge distinct monomials, so coefficients may cancel
from footprint_lab import make_poly, reduce_polynomial

f2 = make_field(2)
poly = make_poly(1, 3, {(2, 1): 1, (1, 2): 1})
print(f"\nover F_2 the form {poly} reduces to",
      repr(str(reduce_polynomial(poly, f2))),
      "- it vanishes at every point of the projective line")
