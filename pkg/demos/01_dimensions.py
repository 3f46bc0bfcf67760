"""Dimensions of linear systems of multi-degree hypersurfaces on (P^1)^r
through general double points.

A system L_(d1,...,dr)(2^n) has an easy count: the sections form a space of
dimension prod(d_i + 1), and every general double point imposes r + 1 linear
conditions.  The virtual dimension is

    v = prod(d_i + 1) - 1 - (r + 1) * n

and the expected dimension is max(v, -1).  The interesting question is when
the actual dimension is larger: such systems are called special.  This script
computes actual dimensions by evaluating interpolation matrices at random
points over F_307 and comparing with the expectation.
"""

from fatpoints import (
    MultiDegree,
    critical_range,
    dim_linear_system,
    product_system,
)

print("Some ordinary (non-special) systems")
print("-----------------------------------")
for degrees, n in [((3, 3), 4), ((2, 3), 4), ((2, 2, 2), 6), ((1, 1, 1, 2), 4)]:
    rep = dim_linear_system(product_system(degrees, n))
    print(f"L_{degrees}(2^{n}): virtual {rep.virtual:>3}, "
          f"computed {rep.computed:>3}  [{rep.status}]")

print()
print("The four special families (at their smallest members)")
print("-----------------------------------------------------")
for degrees, n in [((2, 2), 3), ((1, 1, 2), 3), ((2, 2, 2), 7), ((1, 1, 1, 1), 3)]:
    rep = dim_linear_system(product_system(degrees, n), retries=4)
    print(f"L_{degrees}(2^{n}): expected {rep.expected:>3}, "
          f"computed {rep.computed:>3}  [{rep.status}]")

print()
print("The critical range, where section count and conditions nearly balance")
print("---------------------------------------------------------------------")
deg = MultiDegree((3, 3, 3))
lo, hi = critical_range(deg)
print(f"degrees {deg.degrees}: n- = {lo}, n+ = {hi}")
for n in (lo, hi):
    rep = dim_linear_system(product_system(deg.degrees, n))
    print(f"  n = {n}: virtual {rep.virtual}, computed {rep.computed}")
