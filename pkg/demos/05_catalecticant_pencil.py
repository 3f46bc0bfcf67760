"""The one positive-dimensional exception, seen two independent ways.

L_(1,1,1,1)(2^3) has virtual dimension 0 but actual dimension 1: the
multilinear forms on (P^1)^4 singular at three general points form a pencil.
First we pin the three points to concrete positions and exhibit the two
generators explicitly.  Then we look at the related (2,2,2) phenomenon
through the catalecticant matrix: the 7-th secant variety of the (2,2,2)
embedding of (P^1)^3 is a hypersurface in P^26 cut out by an 8x8
determinant, so a random 7-secant point always has determinant zero while a
random point of P^26 essentially never does.
"""

import itertools

import numpy as np

from fatpoints import dim_at_specific_points, product_system
from fatpoints.catalect import (
    catalecticant_det,
    random_secant_sample,
    symbolic_catalecticant,
)
from fatpoints.interp import conditions_matrix_at

spec = product_system((1, 1, 1, 1), 3)
points = [[0, 0, 0, 0], [(0, 1)] * 4, [1, 1, 1, 1]]
print("pencil: dim at ([1:0]^4, [0:1]^4, [1:1]^4) =",
      dim_at_specific_points(spec, points))

exps = list(itertools.product((0, 1), repeat=4))
g1 = {(0, 1, 0, 1): 1, (0, 1, 1, 0): -1, (1, 0, 0, 1): -1, (1, 0, 1, 0): 1}
g2 = {(0, 0, 1, 1): 1, (0, 1, 1, 0): -1, (1, 0, 0, 1): -1, (1, 1, 0, 0): 1}
m = conditions_matrix_at(spec, points)
for name, g in (("g1", g1), ("g2", g2)):
    vec = np.array([g.get(e, 0) % 307 for e in exps])
    ok = bool((m @ vec % 307 == 0).all())
    print(f"generator {name} satisfies all {m.shape[0]} conditions: {ok}")

print()
print("catalecticant matrix (coefficient * z-index), first two rows:")
for row in symbolic_catalecticant()[:2]:
    print("  " + "  ".join(f"{c}*z{i}" for c, i in row))

print()
zeros = sum(catalecticant_det(random_secant_sample(7, seed=t)) == 0
            for t in range(30))
print(f"7-secant samples with det = 0: {zeros}/30")
rng = np.random.default_rng(1)
nonzero = sum(catalecticant_det([int(x) for x in rng.integers(0, 307, 27)]) != 0
              for _ in range(30))
print(f"random points of P^26 with det != 0: {nonzero}/30")
