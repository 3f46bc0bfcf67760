"""Interpolation matrices at random points over F_p and the dimensions
they determine: actual dimensions of linear systems through fat points,
and secant-variety dimensions via tangent-space spans.

A random sample can only over-estimate the dimension (the rank at any
special position is at most the generic rank), so a trial that meets the
expected dimension is a proof of non-speciality; repeated agreeing
trials above the expectation are reported as a candidate for a genuinely
special system.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from . import gf
from .model import (
    DimReport,
    INCONCLUSIVE,
    LinearSystemSpec,
    MultiDegree,
    NON_SPECIAL,
    PRODUCT,
    SPECIAL_CANDIDATE,
    expected_dimension,
    monomial_basis,
    monomial_basis_projective,
    product_system,
    virtual_dimension,
)

_MASK = (1 << 64) - 1


def mix64(seed: int, index: int) -> int:
    """Derive an independent 64-bit stream seed from (seed, index).

    SplitMix64 finalizer applied to seed + (index+1)*golden-gamma; fixed
    for reproducibility, order-independent across indices.
    """
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


@dataclass(frozen=True)
class PointSample:
    """Affine-chart coordinates of pairwise-distinct points."""

    points: tuple[tuple[int, ...], ...]
    seed: int


@dataclass(frozen=True)
class SecantReport:
    secant_dim: int
    expected_secant_dim: int
    defective: bool
    trials: int
    seed: int


def sample_points(r: int, count: int, seed: int, p: int = gf.DEFAULT_PRIME) -> PointSample:
    """count distinct points of the affine chart, each an r-tuple in F_p."""
    if count > p**r:
        raise ValueError(f"cannot pick {count} distinct points in F_{p}^{r}")
    rng = random.Random(seed)
    seen: set[tuple[int, ...]] = set()
    pts = []
    while len(pts) < count:
        t = tuple(rng.randrange(p) for _ in range(r))
        if t not in seen:
            seen.add(t)
            pts.append(t)
    return PointSample(tuple(pts), seed)


def _derivative_operators(mult: int, r: int) -> list[tuple[int, ...]]:
    """Multi-indices of total order < mult: grade by total order, and
    within a grade descending lex, so (value, d/dt_1, ..., d/dt_r) for
    double points."""
    ops = []
    for s in range(mult):
        grade = [a for a in itertools.product(range(s + 1), repeat=r) if sum(a) == s]
        ops.extend(sorted(grade, reverse=True))
    return ops


def _falling(e: np.ndarray, a: int) -> np.ndarray:
    f = np.ones_like(e)
    for i in range(a):
        f = f * (e - i)
    return np.where(e >= a, f, 0)


def _point_rows(exps: np.ndarray, values, mult: int, p: int) -> np.ndarray:
    """Rows of all order-< mult derivative conditions at one point.

    exps: (ncols, r) local exponent matrix; values: r chart parameters.
    """
    ncols, r = exps.shape
    # power tables per variable
    emax = int(exps.max()) if ncols else 0
    pows = np.empty((r, emax + 1), dtype=np.int64)
    for j in range(r):
        v = 1
        for e in range(emax + 1):
            pows[j, e] = v
            v = v * int(values[j]) % p
    rows = np.empty((len(_derivative_operators(mult, r)), ncols), dtype=np.int64)
    for i, alpha in enumerate(_derivative_operators(mult, r)):
        row = np.ones(ncols, dtype=np.int64)
        for j in range(r):
            e = exps[:, j]
            a = alpha[j]
            if a == 0:
                row = row * pows[j, e] % p
            else:
                coef = _falling(e, a) % p
                row = row * coef % p
                row = row * pows[j, np.maximum(e - a, 0)] % p
        rows[i] = row
    return rows


def _basis_exponents(spec: LinearSystemSpec) -> np.ndarray:
    if spec.ambient == PRODUCT:
        basis = monomial_basis(spec.degree)
    else:
        basis = monomial_basis_projective(spec.degree, spec.r)
    return np.array(basis, dtype=np.int64).reshape(len(basis), spec.r)


def conditions_matrix(spec: LinearSystemSpec, sample: PointSample,
                      p: int = gf.DEFAULT_PRIME) -> np.ndarray:
    """One column per basis monomial; for each point of multiplicity m,
    one row per derivative operator of order < m, evaluated in the
    affine chart."""
    mults = spec.points.multiplicities()
    pts = sample.points if isinstance(sample, PointSample) else tuple(sample)
    if len(pts) != len(mults):
        raise ValueError(f"sample has {len(pts)} points, spec needs {len(mults)}")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points in sample")
    exps = _basis_exponents(spec)
    blocks = [_point_rows(exps, t, m, p) for t, m in zip(pts, mults)]
    nrows = sum(b.shape[0] for b in blocks)
    if not blocks:
        return np.zeros((0, exps.shape[0]), dtype=np.int64)
    return np.vstack(blocks) if nrows else np.zeros((0, exps.shape[0]), dtype=np.int64)


def dim_linear_system(spec: LinearSystemSpec, seed: int = 0, retries: int = 3,
                      p: int = gf.DEFAULT_PRIME) -> DimReport:
    """Actual dimension of the system at random points, minimized over
    up to `retries` independent samples; stops early on a non-special
    verdict (which is a proof)."""
    if retries < 1:
        raise ValueError("retries must be >= 1")
    v = virtual_dimension(spec)
    e = expected_dimension(spec)
    n_pts = spec.points.count
    computed_vals = []
    for trial in range(retries):
        sample = sample_points(spec.r, n_pts, mix64(seed, trial), p)
        m = conditions_matrix(spec, sample, p)
        computed = spec.projective_dim - gf.rank(m, p)
        computed_vals.append(computed)
        if computed == e:
            return DimReport(v, e, computed, NON_SPECIAL, trial + 1, seed)
    best = min(computed_vals)
    status = SPECIAL_CANDIDATE if len(set(computed_vals)) == 1 else INCONCLUSIVE
    return DimReport(v, e, best, status, retries, seed)


def dim_series(deg: MultiDegree, n_max: int, seed: int = 0,
               p: int = gf.DEFAULT_PRIME) -> list[int]:
    """Computed dimensions of the double-point system for n = 0..n_max,
    with nested point samples, via one incremental elimination.

    Each value over-estimates nothing it should not: per cell it is one
    random trial; callers retry cells that miss the expectation.
    """
    if isinstance(deg, tuple):
        deg = MultiDegree(deg)
    exps = np.array(monomial_basis(deg), dtype=np.int64).reshape(-1, deg.r)
    sample = sample_points(deg.r, n_max, seed, p)
    red = gf.RowReducer(exps.shape[0], p)
    n_big = deg.projective_dim
    dims = [n_big]
    for t in sample.points:
        red.add_rows(_point_rows(exps, t, 2, p))
        dims.append(n_big - red.rank)
    return dims


def secant_dimension(deg: MultiDegree, n: int, seed: int = 0, retries: int = 3,
                     p: int = gf.DEFAULT_PRIME) -> SecantReport:
    """Dimension of the span of n tangent spaces of the multi-degree
    embedding of the product of lines, at random points: the dimension
    of the n-secant variety at a general point of the sample."""
    if isinstance(deg, tuple):
        deg = MultiDegree(deg)
    if n < 1:
        raise ValueError("n must be >= 1")
    r = deg.r
    big_n = deg.projective_dim
    expected = min(n * r + n - 1, big_n)
    spec = product_system(deg, n)
    best = -1
    trials = 0
    for trial in range(retries):
        trials = trial + 1
        sample = sample_points(r, n, mix64(seed, trial), p)
        m = conditions_matrix(spec, sample, p)
        best = max(best, gf.rank(m, p) - 1)
        if best == expected:
            break
    return SecantReport(best, expected, best < expected, trials, seed)


def _homogeneous_pair(coord, p: int) -> tuple[int, int]:
    if isinstance(coord, (tuple, list)):
        if len(coord) != 2:
            raise ValueError(f"factor coordinate {coord!r} is not a pair")
        u, v = int(coord[0]) % p, int(coord[1]) % p
        if u == 0 and v == 0:
            raise ValueError("coordinate pair (0, 0) is not a point")
        return u, v
    return 1, int(coord) % p


def conditions_matrix_at(spec: LinearSystemSpec, points,
                         p: int = gf.DEFAULT_PRIME) -> np.ndarray:
    """Condition matrix at explicitly given points, which may lie at
    infinity: per point (and per factor, on a product) the evaluation
    chart is chosen where the coordinate is finite.

    Point formats: on a product of lines, a sequence of r entries, each
    an affine scalar t (the point [1:t]) or a homogeneous pair [u:v]; on
    projective space, r affine scalars or r+1 homogeneous coordinates.
    """
    mults = spec.points.multiplicities()
    if len(points) != len(mults):
        raise ValueError(f"got {len(points)} points, spec needs {len(mults)}")
    if spec.ambient == PRODUCT:
        degrees = spec.degree.degrees
        exps = _basis_exponents(spec)
        seen = set()
        for pt in points:
            key = []
            for c in pt:
                u, v = _homogeneous_pair(c, p)
                key.append((1, v * gf.inverse(u, p) % p) if u else (0, 1))
            key = tuple(key)
            if key in seen:
                raise ValueError(f"duplicate point {pt!r}")
            seen.add(key)
        blocks = []
        for pt, m in zip(points, mults):
            if len(pt) != spec.r:
                raise ValueError(f"point {pt!r} has wrong length")
            loc = np.empty_like(exps)
            vals = []
            for j, coord in enumerate(pt):
                u, v = _homogeneous_pair(coord, p)
                if u != 0:  # chart [1 : t], local exponent e_j
                    loc[:, j] = exps[:, j]
                    vals.append(v * gf.inverse(u, p) % p)
                else:  # chart [s : 1] with s = 0, local exponent d_j - e_j
                    loc[:, j] = degrees[j] - exps[:, j]
                    vals.append(0)
            blocks.append(_point_rows(loc, vals, m, p))
        return np.vstack(blocks)
    # projective space: homogenize the chart exponents, then pick a chart
    d = spec.degree
    aff = _basis_exponents(spec)
    full = np.hstack([(d - aff.sum(axis=1)).reshape(-1, 1), aff])
    blocks = []
    for pt, m in zip(points, mults):
        if len(pt) == spec.r:
            coords = [1] + [int(c) % p for c in pt]
        elif len(pt) == spec.r + 1:
            coords = [int(c) % p for c in pt]
        else:
            raise ValueError(f"point {pt!r} has wrong length")
        if all(c == 0 for c in coords):
            raise ValueError("all-zero homogeneous coordinates")
        j = next(i for i, c in enumerate(coords) if c != 0)
        inv = gf.inverse(coords[j], p)
        keep = [i for i in range(spec.r + 1) if i != j]
        loc = full[:, keep]
        vals = [coords[i] * inv % p for i in keep]
        blocks.append(_point_rows(loc, vals, m, p))
    return np.vstack(blocks)


def dim_at_specific_points(spec: LinearSystemSpec, points,
                           p: int = gf.DEFAULT_PRIME) -> int:
    """Dimension of the system at exactly the given points."""
    if not points:
        return spec.projective_dim
    m = conditions_matrix_at(spec, points, p)
    return spec.projective_dim - gf.rank(m, p)
