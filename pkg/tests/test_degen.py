"""Degeneration certificate trees: planning, checking, serialization."""

import itertools
import json

import pytest

from fatpoints import check, classify, plan
from fatpoints.degen import (
    BASE_CASE,
    CITATION,
    DOUBLE_DEG,
    EXCEPTION_LOOKUP,
    SIMPLE_DEG,
    PlanError,
    base_step_covers,
    case1_params,
    case2_params,
    dumps,
    loads,
    node_from_dict,
    node_to_dict,
)


def test_case1_params():
    # k = r and the last-factor block absorbs n2 = prod of the other d_i + 1
    p = case1_params((2, 2, 2, 6), 37)
    assert (p.k, p.n2) == (4, 27)
    p = case1_params((1, 1, 1, 7), 12)
    assert (p.k, p.n2) == (4, 8)


def test_case2_params_balance():
    # beta and n2 satisfy prod(d_i + 1 for i < r) = r*(n2 - beta) + beta
    for head in [(1, 2, 2), (2, 2, 2), (1, 1, 1, 1), (1, 1, 2, 3)]:
        prod = 1
        for d in head:
            prod *= d + 1
        r = len(head) + 1
        p = case2_params(head + (9,), 30)
        assert 0 <= p.beta < r
        assert prod == r * (p.n2 - p.beta) + p.beta


def test_base_step_covers():
    assert base_step_covers((2, 3))
    assert base_step_covers((6, 6, 6))
    assert not base_step_covers((7, 2))
    assert base_step_covers((1, 1, 5, 6))
    assert not base_step_covers((2, 3, 3, 5))
    assert base_step_covers((2, 2, 2, 5))
    assert base_step_covers((1, 1, 1, 1, 5))
    assert not base_step_covers((1, 1, 1, 2, 5))


def test_plan_rules():
    assert plan((2, 2, 2), 7).rule == EXCEPTION_LOOKUP
    assert plan((3, 3), 5).rule == BASE_CASE
    node = plan((2, 2, 2, 6), 37)
    assert node.rule == SIMPLE_DEG
    assert node.params.k == 4 and node.params.n2 == 27
    node = plan((1, 2, 2, 7), 28)
    assert node.rule == DOUBLE_DEG
    assert node.params.k == 1 and node.params.beta == 2
    assert plan((1,) * 6, 10, product_cap=10).rule == CITATION


def test_plan_dim_matches_classification():
    for degrees in [(2, 2), (1, 1, 2), (2, 2, 2), (1, 1, 1, 1), (3, 4, 5)]:
        for n in range(0, 9):
            assert plan(degrees, n).dim == classify(degrees, n).dim


def test_invalid_beta_rejected():
    node = plan((1, 2, 2, 7), 28)
    d = node_to_dict(node)
    d["params"]["beta"] = 4  # k = 1 requires 0 <= beta < r
    res = check(node_from_dict(d))
    assert not res.ok
    assert any("beta" in msg for _, msg in res.failures)


def test_checker_catches_wrong_n2():
    d = node_to_dict(plan((2, 2, 2, 6), 37))
    d["params"]["n2"] = 26
    res = check(node_from_dict(d))
    assert not res.ok
    path, msg = res.failures[0]
    assert path == "root" and "n2" in msg


def test_checker_catches_wrong_child_degrees():
    d = node_to_dict(plan((2, 2, 2, 6), 37))
    d["children"]["lhat1"]["claim"]["spec"]["degrees"] = [2, 2, 2, 2]
    res = check(node_from_dict(d))
    assert not res.ok
    assert any("lhat1" in msg or "lhat1" in path for path, msg in res.failures)


def test_checker_catches_wrong_leaf_dim():
    d = node_to_dict(plan((3, 3), 5))
    d["claim"]["dim"] += 1
    res = check(node_from_dict(d))
    assert not res.ok


def test_check_passes_and_reports_evidence():
    node = plan((2, 2, 2, 6), 38)
    res = check(node)
    assert res.ok and not res.failures
    # base-case leaves carry the prime/seed/rank used for verification
    leaves = []

    def walk(nd):
        if nd.rule == BASE_CASE:
            leaves.append(nd)
        for ch in nd.children.values():
            walk(ch)

    walk(node)
    assert leaves
    assert all(nd.evidence and nd.evidence.get("prime") == 307 for nd in leaves)


def test_json_round_trip():
    for degrees, n in [((2, 2, 2, 6), 37), ((1, 2, 2, 7), 28), ((2, 2, 2), 7)]:
        node = plan(degrees, n)
        text = dumps(node)
        back = loads(text)
        assert node_to_dict(back) == node_to_dict(node)
        # the wire format is plain JSON with a stable top-level shape
        doc = json.loads(text)
        assert set(doc) == {"claim", "rule", "params", "children", "leafEvidence"}


def test_plan_terminates_and_checks_everywhere_small():
    cache = {}
    for r in (2, 3, 4):
        for degrees in itertools.combinations_with_replacement(range(1, 9 - r), r):
            n = sum(d + 1 for d in degrees) // (r + 1)
            node = plan(degrees, n)
            assert check(node, cache=cache).ok, (degrees, n)


def test_product_cap():
    with pytest.raises(PlanError):
        plan((30, 30, 30), 5000, product_cap=100)
