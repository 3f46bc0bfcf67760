"""Dimension-preserving reductions: product-of-lines to projective
space, and the standard quadratic transformation degree drop on P^n.

Both rules move a fat-point system to another one with the same
dimension; iterating the quadratic transformation on the largest
multiplicities reproduces the classical reduction chains used to pin
down the dimensions of the special systems.
"""

from __future__ import annotations


from .model import (
    FatPointSpec,
    LinearSystemSpec,
    PRODUCT,
    PROJECTIVE,
    projective_system,
)


class ReductionError(ValueError):
    pass


def to_projective(spec: LinearSystemSpec) -> LinearSystemSpec:
    """Transform a double-point system on a product of r lines into the
    degree-(d_1+...+d_r) system on P^r with r extra base points of
    multiplicities d-d_i prepended, then the n double points."""
    if spec.ambient != PRODUCT:
        raise ReductionError("to_projective expects a product-of-lines system")
    if any(m != 2 for m, _ in spec.points.entries):
        raise ReductionError("to_projective is stated for double points only")
    degrees = spec.degree.degrees
    d = sum(degrees)
    n = spec.points.count
    mults = tuple(d - di for di in degrees) + (2,) * n
    return projective_system(spec.r, d, FatPointSpec.from_multiplicities(mults))


def cremona_reduce(spec: LinearSystemSpec, chosen, *,
                   drop_zeros: bool = True) -> LinearSystemSpec:
    """Apply the standard degree/multiplicity shift on P^n.

    ``chosen`` selects n+1 point indices; with k = (n-1)d - sum of the
    chosen multiplicities, the degree becomes d+k and each chosen
    multiplicity m becomes m+k.  Multiplicities that reach zero are
    dropped (a 0-fold point is no condition).
    """
    if spec.ambient != PROJECTIVE:
        raise ReductionError("cremona_reduce expects a projective-space system")
    n = spec.r
    mults = list(spec.points.multiplicities())
    chosen = tuple(chosen)
    if len(chosen) != n + 1:
        raise ReductionError(f"need exactly {n + 1} point indices")
    if len(set(chosen)) != len(chosen):
        raise ReductionError("repeated point index")
    if any(i < 0 or i >= len(mults) for i in chosen):
        raise ReductionError("point index out of range")
    d = spec.degree
    k = (n - 1) * d - sum(mults[i] for i in chosen)
    if d + k < 0:
        raise ReductionError(f"degree would become {d + k}")
    for i in chosen:
        if mults[i] + k < 0:
            raise ReductionError(f"multiplicity {mults[i]} would become {mults[i] + k}")
    for i in chosen:
        mults[i] += k
    if drop_zeros:
        mults = [m for m in mults if m > 0]
    elif any(m == 0 for m in mults):
        raise ReductionError("zero multiplicity cannot be kept; use drop_zeros")
    return projective_system(n, d + k, FatPointSpec.from_multiplicities(mults))


def _greedy_choice(mults, n_plus_1: int):
    order = sorted(range(len(mults)), key=lambda i: (-mults[i], i))
    return tuple(sorted(order[:n_plus_1]))


def greedy_cremona_chain(spec: LinearSystemSpec) -> list[LinearSystemSpec]:
    """Repeatedly reduce through the n+1 largest multiplicities while
    the shift k is negative; returns the chain including endpoints."""
    chain = [spec]
    while True:
        cur = chain[-1]
        mults = cur.points.multiplicities()
        n = cur.r
        if len(mults) < n + 1:
            break
        chosen = _greedy_choice(mults, n + 1)
        k = (n - 1) * cur.degree - sum(mults[i] for i in chosen)
        if k >= 0:
            break
        try:
            nxt = cremona_reduce(cur, chosen)
        except ReductionError:
            break
        chain.append(nxt)
    return chain
