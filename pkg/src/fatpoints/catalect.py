"""The order-(1,1,1) contraction matrix of a tri-quadratic tensor on
three lines and the determinantal equation of the 7-secant hypersurface
of the (2,2,2)-embedding.

A tensor f lives in Sym^2(V) x Sym^2(V) x Sym^2(V) with dim V = 2 and
is stored as 27 coefficients z_0..z_26, where the coefficient of the
monomial with a-part a_0^(2-i) a_1^i, b-part index j, c-part index k is
z_(i + 3j + 9k).  Contracting by a_i* b_j* c_k* (differentiation) gives
an 8x8 matrix whose rank is at most 7 exactly when f is a sum of at
most 7 decomposable squares; its determinant cuts out the 7-secant
hypersurface.

Row order is i + 2*j + 4*k (a-index fastest); column order is
4*i + 2*j + k (c-index fastest).  The convention is pinned down by a
symbolic golden test against the known determinant display.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from . import gf


def _check_field(p: int | None):
    if p is not None and p == 2:
        raise ValueError("characteristic 2 degenerates the 8/4/2 weights")


def symbolic_catalecticant() -> list[list[tuple[int, int]]]:
    """The 8x8 matrix as (weight, z-index) pairs."""
    rows = []
    for k in range(2):  # row index i + 2j + 4k counts up with i fastest
        for j in range(2):
            for i in range(2):
                row = [None] * 8
                for kk in range(2):
                    for jj in range(2):
                        for ii in range(2):
                            w = (2 if i == ii else 1) * (2 if j == jj else 1) \
                                * (2 if k == kk else 1)
                            z = (i + ii) + 3 * (j + jj) + 9 * (k + kk)
                            row[4 * ii + 2 * jj + kk] = (w, z)
                rows.append(row)
    return rows


_SYMBOLIC = symbolic_catalecticant()


def catalecticant(z, p: int | None = gf.DEFAULT_PRIME):
    """The 8x8 contraction matrix of the tensor with coefficients z.

    With an integer prime p the entries are reduced mod p and an int64
    array is returned; with p=None the computation is exact over the
    rationals and a list of Fraction rows is returned.
    """
    _check_field(p)
    if len(z) != 27:
        raise ValueError("need 27 coefficients")
    if p is None:
        return [[Fraction(w) * Fraction(z[zi]) for w, zi in row] for row in _SYMBOLIC]
    m = np.empty((8, 8), dtype=np.int64)
    for a, row in enumerate(_SYMBOLIC):
        for b, (w, zi) in enumerate(row):
            m[a, b] = w * (int(z[zi]) % p) % p
    return m


def _det_rational(rows) -> Fraction:
    a = [list(r) for r in rows]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            d = -d
        d *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def catalecticant_det(z, p: int | None = gf.DEFAULT_PRIME):
    m = catalecticant(z, p)
    if p is None:
        return _det_rational(m)
    return gf.det(m, p)


def secant_membership_test(z, p: int | None = gf.DEFAULT_PRIME) -> bool:
    """True exactly when the contraction determinant vanishes, as it
    does on every sum of at most 7 decomposable squares."""
    return catalecticant_det(z, p) == 0


def power_coefficients(a, b, c, p: int | None = gf.DEFAULT_PRIME):
    """Coefficient vector of a^2 (x) b^2 (x) c^2 for linear forms given
    by coefficient pairs."""
    _check_field(p)

    def square(u):
        u0, u1 = u
        q = [u0 * u0, 2 * u0 * u1, u1 * u1]
        return [x % p for x in q] if p is not None else q

    qa, qb, qc = square(a), square(b), square(c)
    z = [0] * 27
    for k in range(3):
        for j in range(3):
            for i in range(3):
                v = qa[i] * qb[j] * qc[k]
                z[i + 3 * j + 9 * k] = v % p if p is not None else v
    return z


def random_secant_sample(terms: int, seed: int = 0,
                         p: int = gf.DEFAULT_PRIME) -> list[int]:
    """Sum of `terms` random decomposable squares over F_p."""
    _check_field(p)
    rng = random.Random(seed)

    def form():
        while True:
            u = (rng.randrange(p), rng.randrange(p))
            if u != (0, 0):
                return u

    z = [0] * 27
    for _ in range(terms):
        zi = power_coefficients(form(), form(), form(), p)
        z = [(x + y) % p for x, y in zip(z, zi)]
    return z
