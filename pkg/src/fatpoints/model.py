"""Combinatorial core: multi-degrees, fat-point schemes, linear system
specs, virtual/expected dimensions and the critical point-count range.

A linear system here is either

* all hypersurfaces of multi-degree (d_1, ..., d_r) on a product of r
  projective lines, through a prescribed scheme of fat points, or
* all degree-d hypersurfaces of projective r-space through fat points.

Values are plain frozen dataclasses, freely shareable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, prod

PRODUCT = "product"
PROJECTIVE = "projective"

NON_SPECIAL = "NonSpecial"
SPECIAL_CANDIDATE = "SpecialCandidate"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class MultiDegree:
    """The tuple (d_1, ..., d_r); degrees may be zero, never negative."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.degrees) < 1:
            raise ValueError("need at least one factor")
        if any(d < 0 for d in self.degrees):
            raise ValueError(f"negative degree in {self.degrees}")
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def section_count(self) -> int:
        return prod(d + 1 for d in self.degrees)

    @property
    def projective_dim(self) -> int:
        return self.section_count - 1

    def sorted(self) -> "MultiDegree":
        return MultiDegree(tuple(sorted(self.degrees)))


@dataclass(frozen=True)
class FatPointSpec:
    """Multiset of point multiplicities as (multiplicity, count) runs.

    The expansion order of :meth:`multiplicities` is the entry order;
    reductions rely on it to address individual points.
    """

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        ent = tuple((int(m), int(c)) for m, c in self.entries)
        if any(m < 1 for m, _ in ent):
            raise ValueError("multiplicities must be positive")
        if any(c < 0 for _, c in ent):
            raise ValueError("counts must be non-negative")
        object.__setattr__(self, "entries", tuple((m, c) for m, c in ent if c > 0))

    @classmethod
    def doubles(cls, n: int) -> "FatPointSpec":
        return cls(((2, n),)) if n else cls()

    @classmethod
    def from_multiplicities(cls, ms) -> "FatPointSpec":
        ent = []
        for m in ms:
            if ent and ent[-1][0] == m:
                ent[-1][1] += 1
            else:
                ent.append([m, 1])
        return cls(tuple((m, c) for m, c in ent))

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for m, c in self.entries for _ in range(c))

    @property
    def count(self) -> int:
        return sum(c for _, c in self.entries)

    def condition_count(self, r: int) -> int:
        """Conditions imposed on an r-dimensional ambient space."""
        return sum(c * comb(m - 1 + r, r) for m, c in self.entries)


@dataclass(frozen=True)
class LinearSystemSpec:
    ambient: str  # PRODUCT or PROJECTIVE
    r: int
    degree: MultiDegree | int
    points: FatPointSpec

    def __post_init__(self):
        if self.ambient == PRODUCT:
            deg = self.degree
            if isinstance(deg, tuple):
                deg = MultiDegree(deg)
                object.__setattr__(self, "degree", deg)
            if not isinstance(deg, MultiDegree) or deg.r != self.r:
                raise ValueError("product ambient needs a length-r MultiDegree")
        elif self.ambient == PROJECTIVE:
            if self.r < 1:
                raise ValueError("projective ambient needs r >= 1")
            if not isinstance(self.degree, int) or self.degree < 0:
                raise ValueError("projective ambient needs a single degree >= 0")
        else:
            raise ValueError(f"unknown ambient {self.ambient!r}")

    @property
    def section_count(self) -> int:
        if self.ambient == PRODUCT:
            return self.degree.section_count
        return comb(self.degree + self.r, self.r)

    @property
    def projective_dim(self) -> int:
        return self.section_count - 1

    @property
    def condition_count(self) -> int:
        return self.points.condition_count(self.r)


def product_system(degrees, points) -> LinearSystemSpec:
    deg = degrees if isinstance(degrees, MultiDegree) else MultiDegree(tuple(degrees))
    if isinstance(points, int):
        points = FatPointSpec.doubles(points)
    return LinearSystemSpec(PRODUCT, deg.r, deg, points)


def projective_system(r: int, d: int, points) -> LinearSystemSpec:
    if isinstance(points, int):
        points = FatPointSpec.doubles(points)
    elif not isinstance(points, FatPointSpec):
        points = FatPointSpec.from_multiplicities(points)
    return LinearSystemSpec(PROJECTIVE, r, d, points)


def monomial_basis(deg: MultiDegree) -> list[tuple[int, ...]]:
    """Exponent vectors e with 0 <= e_i <= d_i, lexicographic order."""
    if isinstance(deg, tuple):
        deg = MultiDegree(deg)
    return list(itertools.product(*(range(d + 1) for d in deg.degrees)))


def monomial_basis_projective(d: int, r: int) -> list[tuple[int, ...]]:
    """Affine-chart exponent vectors with total degree <= d, lex order."""
    return [e for e in itertools.product(range(d + 1), repeat=r) if sum(e) <= d]


def virtual_dimension(spec: LinearSystemSpec) -> int:
    return spec.section_count - 1 - spec.condition_count


def expected_dimension(spec: LinearSystemSpec) -> int:
    return max(virtual_dimension(spec), -1)


def critical_range(deg: MultiDegree) -> tuple[int, int]:
    """The only point counts whose analysis is not forced by monotonicity.

    Below the lower bound conditions stay independent if they were at the
    bound; above the upper bound emptiness persists.
    """
    if isinstance(deg, tuple):
        deg = MultiDegree(deg)
    s = deg.section_count
    q, rem = divmod(s, deg.r + 1)
    return (q, q if rem == 0 else q + 1)


@dataclass(frozen=True)
class DimReport:
    virtual: int
    expected: int
    computed: int
    status: str  # NON_SPECIAL / SPECIAL_CANDIDATE / INCONCLUSIVE
    trials: int
    seed: int
