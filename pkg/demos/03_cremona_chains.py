"""Reducing the special systems by Cremona transformations.

Each special family can be certified by hand: push the system onto
projective space (L_(d1..dr)(2^n) becomes a degree d = d1+...+dr system on
P^r with r extra fat base points of multiplicities d - d_i), then repeatedly
apply the standard Cremona transformation, which shifts the degree and n+1
chosen multiplicities by k = (r-1)d - (sum of chosen multiplicities) while
preserving the dimension.  The chains below terminate in tiny systems whose
dimensions are obvious, confirming each exceptional dimension exactly.
"""

from fatpoints import (
    dim_linear_system,
    greedy_cremona_chain,
    product_system,
    to_projective,
)


def describe(spec):
    mults = ",".join(str(m) for m in spec.points.multiplicities())
    return f"L_{spec.degree}({mults}) on P^{spec.r}"


for degrees, n in [((2, 2), 3), ((1, 1, 2), 3), ((2, 2, 2), 7), ((1, 1, 1, 1), 3)]:
    src = product_system(degrees, n)
    print(f"L_{degrees}(2^{n})  "
          f"(computed dim {dim_linear_system(src, retries=4).computed})")
    for step in greedy_cremona_chain(to_projective(src)):
        dim = dim_linear_system(step, retries=4).computed
        print(f"   -> {describe(step):34} dim {dim}")
    print()
