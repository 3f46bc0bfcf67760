"""Constant-time classification of double-point systems on products of
lines: non-special with the expected dimension, except for four known
families whose dimensions are tabulated.

A factor of degree zero is dropped before matching: a section pulled
back from the smaller product has identically vanishing derivative
along the dropped factor, so a double point downstairs imposes exactly
the surviving conditions and the dimension is computed there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import expected_dimension, product_system

TWO_TWO_A = "TwoTwoA"
ONE_ONE_TWO_A = "OneOneTwoA"
TWO_TWO_TWO = "TwoTwoTwo"
ALL_ONES_R4 = "AllOnesR4"

SPECIAL = "Special"
NON_SPECIAL = "NonSpecial"


@dataclass(frozen=True)
class Classification:
    status: str  # SPECIAL or NON_SPECIAL
    dim: int
    exception_family: str | None = None


@dataclass(frozen=True)
class ExceptionRow:
    family: str
    r: int
    virtual: int
    dim: int
    parametric: bool

    def instantiate(self, a: int = 1) -> tuple[tuple[int, ...], int, int, int]:
        """Concrete (degrees, n, virtual, dim) for the given a >= 1."""
        if a < 1:
            raise ValueError("a must be >= 1")
        if self.family == TWO_TWO_A:
            return ((2, 2 * a), 2 * a + 1, -1, 0)
        if self.family == ONE_ONE_TWO_A:
            return ((1, 1, 2 * a), 2 * a + 1, -1, 0)
        if self.family == TWO_TWO_TWO:
            return ((2, 2, 2), 7, -2, 0)
        return ((1, 1, 1, 1), 3, 0, 1)


def exception_table() -> list[ExceptionRow]:
    return [
        ExceptionRow(TWO_TWO_A, 2, -1, 0, True),
        ExceptionRow(ONE_ONE_TWO_A, 3, -1, 0, True),
        ExceptionRow(TWO_TWO_TWO, 3, -2, 0, False),
        ExceptionRow(ALL_ONES_R4, 4, 0, 1, False),
    ]


def normalize_degrees(degrees) -> tuple[int, ...]:
    """Drop zero factors and sort ascending; error when nothing is left."""
    deg = tuple(sorted(d for d in degrees if d > 0))
    if not deg:
        raise ValueError(f"all-zero degree tuple {tuple(degrees)!r}")
    if any(d < 0 for d in degrees):
        raise ValueError(f"negative degree in {tuple(degrees)!r}")
    return deg


def _match_family(deg: tuple[int, ...], n: int) -> str | None:
    r = len(deg)
    if r == 2 and deg[0] == 2 and deg[1] % 2 == 0 and n == deg[1] + 1:
        return TWO_TWO_A
    if r == 3:
        if deg == (2, 2, 2) and n == 7:
            return TWO_TWO_TWO
        if deg[:2] == (1, 1) and deg[2] % 2 == 0 and n == deg[2] + 1:
            return ONE_ONE_TWO_A
    if r == 4 and deg == (1, 1, 1, 1) and n == 3:
        return ALL_ONES_R4
    return None


def classify(degrees, n: int) -> Classification:
    """Dimension of the system of the given multi-degree through n
    general double points.  Exact for generic points; says nothing
    about special positions."""
    if n < 0:
        raise ValueError("n must be >= 0")
    deg = normalize_degrees(
        degrees.degrees if hasattr(degrees, "degrees") else degrees)
    family = _match_family(deg, n)
    if family is not None:
        dims = {TWO_TWO_A: 0, ONE_ONE_TWO_A: 0, TWO_TWO_TWO: 0, ALL_ONES_R4: 1}
        return Classification(SPECIAL, dims[family], family)
    return Classification(NON_SPECIAL, expected_dimension(product_system(deg, n)))
