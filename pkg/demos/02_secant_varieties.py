"""Secant varieties of Segre-Veronese embeddings of (P^1)^r.

The multi-degree (d1,...,dr) monomials embed (P^1)^r into P^N with
N = prod(d_i + 1) - 1.  The n-th secant variety of the image has expected
dimension min(n*r + n - 1, N), and the same double-point interpolation
matrix computes its actual dimension: the tangent space at a general point
of the secant variety is spanned by the tangent spaces at n general points
of the embedded variety, so the secant dimension is the matrix rank minus
one, while the linear-system dimension is N minus the rank.  The two numbers
always add up to N - 1.
"""

from fatpoints import MultiDegree, critical_range, secant_dimension

print("Defective secant varieties (actual < expected)")
print("----------------------------------------------")
for degrees, n in [((2, 2, 2), 7), ((1, 1, 1, 1), 3)]:
    s = secant_dimension(MultiDegree(degrees), n)
    print(f"degrees {degrees}, n = {n}: secant dim {s.secant_dim} "
          f"vs expected {s.expected_secant_dim}  defective = {s.defective}")

print()
print("Everything else in the critical range is non-defective")
print("------------------------------------------------------")
for degrees in [(2, 2, 2), (3, 3), (1, 1, 1, 1, 1), (2, 3, 4)]:
    deg = MultiDegree(degrees)
    for n in sorted(set(critical_range(deg))):
        s = secant_dimension(deg, n)
        flag = "DEFECTIVE" if s.defective else "ok"
        print(f"degrees {degrees}, n = {n}: {s.secant_dim} / "
              f"{s.expected_secant_dim}  [{flag}]")
