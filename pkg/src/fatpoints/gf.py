"""Exact arithmetic in the prime field F_p and dense matrix rank.

Matrices are numpy int64 arrays with entries reduced into [0, p).  Every
intermediate product is a single 64-bit multiplication, which is exact as
long as p**2 < 2**63; :func:`validate_prime` enforces that bound.  The
default prime is 307, small enough that genericity failures of random
samples are rare in practice while products stay tiny.
"""

from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 307

# largest prime p with p**2 < 2**63
MAX_PRIME = 3_037_000_493


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def validate_prime(p: int) -> int:
    """Check that p is usable as a field modulus; return it."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"modulus {p!r} is not prime")
    if p > MAX_PRIME:
        raise ValueError(f"prime {p} too large for 64-bit exact products")
    return p


def inverse(a: int, p: int = DEFAULT_PRIME) -> int:
    """Multiplicative inverse of a mod p.  Raises on zero input."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of 0 in F_p")
    return pow(a, -1, p)


def _as_matrix(m, p: int) -> np.ndarray:
    a = np.array(m, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return a % p


def rank(m, p: int = DEFAULT_PRIME) -> int:
    """Rank of m over F_p by Gaussian elimination.

    The input is copied, never modified.  Partial pivoting by first
    nonzero entry; exact arithmetic needs no numerical pivot strategy.
    """
    a = _as_matrix(m, p)
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * inverse(int(a[r, c]), p) % p
        below = np.nonzero(a[r + 1:, c])[0]
        if below.size:
            idx = r + 1 + below
            a[idx] = (a[idx] - np.outer(a[idx, c], a[r])) % p
        r += 1
    return r


def det(m, p: int = DEFAULT_PRIME) -> int:
    """Determinant of a square matrix over F_p."""
    a = _as_matrix(m, p)
    n, nc = a.shape
    if n != nc:
        raise ValueError("determinant of a non-square matrix")
    d = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            a[[c, i]] = a[[i, c]]
            d = p - d
        piv = int(a[c, c])
        d = d * piv % p
        inv = inverse(piv, p)
        below = np.nonzero(a[c + 1:, c])[0]
        if below.size:
            idx = c + 1 + below
            f = a[idx, c] * inv % p
            a[idx] = (a[idx] - np.outer(f, a[c])) % p
    return d % p


class RowReducer:
    """Incremental row-echelon basis over F_p.

    Rows are fed one batch at a time; the reducer keeps a set of
    independent rows, each normalized to leading coefficient 1, indexed
    by pivot column.  Used to compute rank along a growing matrix (for
    dimension series over an increasing number of points) at the cost of
    a single elimination.
    """

    def __init__(self, ncols: int, p: int = DEFAULT_PRIME):
        self.ncols = ncols
        self.p = p
        self._pivot_rows: dict[int, np.ndarray] = {}

    @property
    def rank(self) -> int:
        return len(self._pivot_rows)

    def add_row(self, row: np.ndarray) -> bool:
        """Reduce one row against the basis; True if it added a pivot."""
        p = self.p
        row = np.asarray(row, dtype=np.int64) % p
        while True:
            nz = np.nonzero(row)[0]
            if nz.size == 0:
                return False
            c = int(nz[0])
            piv = self._pivot_rows.get(c)
            if piv is None:
                self._pivot_rows[c] = row * inverse(int(row[c]), p) % p
                return True
            row = (row - row[c] * piv) % p

    def add_rows(self, rows: np.ndarray) -> int:
        added = 0
        for row in np.atleast_2d(rows):
            if self.add_row(row):
                added += 1
        return added
