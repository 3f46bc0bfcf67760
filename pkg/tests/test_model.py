"""Specs, counting, monomial bases, virtual/expected dimensions, critical range."""

import math

import pytest

from fatpoints import (
    MultiDegree,
    FatPointSpec,
    critical_range,
    expected_dimension,
    monomial_basis,
    product_system,
    projective_system,
    virtual_dimension,
)
from fatpoints.model import monomial_basis_projective


def test_multidegree_counts():
    d = MultiDegree((2, 3, 1))
    assert d.r == 3
    assert d.section_count == 3 * 4 * 2
    assert d.projective_dim == 23
    assert MultiDegree((5,)).section_count == 6
    with pytest.raises(ValueError):
        MultiDegree(())
    with pytest.raises(ValueError):
        MultiDegree((2, -1))


def test_fat_point_spec():
    pts = FatPointSpec.doubles(4)
    assert pts.count == 4
    assert pts.multiplicities() == (2, 2, 2, 2)
    mixed = FatPointSpec.from_multiplicities((4, 2, 2, 2))
    assert mixed.count == 4
    assert sorted(mixed.multiplicities(), reverse=True) == [4, 2, 2, 2]
    # a double point in r variables imposes r + 1 conditions
    assert pts.condition_count(3) == 4 * 4
    # an m-fold point on a surface imposes binomial(m + 1, 2) conditions
    assert FatPointSpec.from_multiplicities((4,)).condition_count(2) == 10


def test_virtual_and_expected_dimension():
    # product of lines: v = prod(d_i + 1) - 1 - (r + 1) * n
    sys = product_system((2, 2), 3)
    assert virtual_dimension(sys) == 9 - 1 - 3 * 3
    assert expected_dimension(sys) == -1
    sys = product_system((1, 1, 1, 1), 3)
    assert virtual_dimension(sys) == 16 - 1 - 5 * 3
    assert expected_dimension(sys) == 0
    # projective space: sections of degree d are binomial(d + r, r)
    sys = projective_system(2, 4, FatPointSpec.from_multiplicities((2, 2, 2)))
    assert virtual_dimension(sys) == math.comb(6, 2) - 1 - 3 * 3


def test_critical_range():
    # n- = floor(prod(d_i + 1) / (r + 1)), n+ = ceil of the same
    assert critical_range(MultiDegree((2, 2, 2))) == (6, 7)
    assert critical_range(MultiDegree((1, 1, 1, 1))) == (3, 4)
    assert critical_range(MultiDegree((3, 3))) == (5, 6)
    lo, hi = critical_range(MultiDegree((2, 2, 2, 6)))
    assert (lo, hi) == (37, 38)
    assert hi - lo in (0, 1)


def test_monomial_basis_order():
    basis = monomial_basis(MultiDegree((1, 2)))
    assert basis == [
        (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2),
    ]
    assert len(monomial_basis(MultiDegree((2, 2, 2)))) == 27
    proj = monomial_basis_projective(2, 2)
    assert set(proj) == {(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)}
    assert len(monomial_basis_projective(3, 4)) == math.comb(7, 3)


def test_spec_validation():
    with pytest.raises(ValueError):
        product_system((2, 2), -1)
    with pytest.raises(ValueError):
        FatPointSpec.from_multiplicities((2, 0))
    with pytest.raises(ValueError):
        projective_system(0, 3, 1)


def test_sorted_degrees():
    assert MultiDegree((3, 1, 2)).sorted().degrees == (1, 2, 3)
