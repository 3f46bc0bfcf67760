"""The classification oracle and its exception table."""

import itertools

import pytest

from fatpoints import classify, dim_linear_system, expected_dimension, product_system
from fatpoints.classify import (
    ALL_ONES_R4,
    ONE_ONE_TWO_A,
    TWO_TWO_A,
    TWO_TWO_TWO,
    exception_table,
    normalize_degrees,
)


def test_exception_table_rows():
    rows = exception_table()
    assert len(rows) == 4
    families = {r.family for r in rows}
    assert families == {TWO_TWO_A, ONE_ONE_TWO_A, TWO_TWO_TWO, ALL_ONES_R4}


def test_exception_instances():
    for a in (1, 2, 3):
        c = classify((2, 2 * a), 2 * a + 1)
        assert c.status == "Special" and c.dim == 0 and c.exception_family == TWO_TWO_A
        c = classify((1, 1, 2 * a), 2 * a + 1)
        assert c.status == "Special" and c.dim == 0 and c.exception_family == ONE_ONE_TWO_A
    c = classify((2, 2, 2), 7)
    assert c.status == "Special" and c.dim == 0 and c.exception_family == TWO_TWO_TWO
    c = classify((1, 1, 1, 1), 3)
    assert c.status == "Special" and c.dim == 1 and c.exception_family == ALL_ONES_R4


def test_exceptions_only_at_their_point_count():
    for n in (2, 4, 6, 8):
        assert classify((2, 2), n).status == "NonSpecial"
    assert classify((2, 2, 2), 6).status == "NonSpecial"
    assert classify((1, 1, 1, 1), 4).status == "NonSpecial"


def test_degree_order_and_zero_factors_are_normalized():
    assert normalize_degrees((4, 2)) == (2, 4)
    assert normalize_degrees((0, 2, 0, 2)) == (2, 2)
    with pytest.raises(ValueError):
        normalize_degrees((0, 0))
    with pytest.raises(ValueError):
        normalize_degrees((2, -1))
    # (2a, 2) is the same system as (2, 2a); zero factors are pullbacks
    assert classify((4, 2), 5).status == "Special"
    assert classify((2, 0, 2), 3).status == "Special"
    assert classify((0, 1, 1, 1, 1), 3).dim == 1


def test_non_special_dims_are_expected():
    for degrees in [(1, 3), (2, 3), (3, 3), (1, 2, 2), (1, 1, 1, 2)]:
        sys_n = product_system(degrees, 2)
        c = classify(degrees, 2)
        assert c.status == "NonSpecial"
        assert c.dim == expected_dimension(sys_n)


def test_classification_matches_computation():
    # exhaustive small check of the oracle against interpolation
    for r in (2, 3):
        for degrees in itertools.combinations_with_replacement(range(1, 5), r):
            for n in range(0, 8):
                c = classify(degrees, n)
                rep = dim_linear_system(product_system(degrees, n), retries=4)
                assert rep.computed == c.dim, (degrees, n)
                if c.status == "Special":
                    assert rep.status == "SpecialCandidate"
