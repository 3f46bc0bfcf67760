"""Certificate trees for the degeneration induction behind the
classification, and an independent checker.

A certificate node claims a dimension for a double-point system on a
product of lines and justifies it by one of:

* ``BaseCase`` — a finite-field rank computation at random points;
* ``Citation`` — the published all-ones base in six or more factors,
  trusted without a rank when the matrix would be too large;
* ``ExceptionLookup`` — one of the four special families;
* ``SimpleDeg`` — split the last degree as d_r = (d_r - k) + k with
  k = r and n_2 = prod_{i<r}(d_i + 1) points moved to the low-degree
  component, whose system then has virtual dimension -1; if it is
  empty, the limit system is the kernel system of the other component,
  which has the same virtual dimension as the original;
* ``DoubleDeg`` — split off degree k = 1 and additionally push beta
  points onto the intersection divisor, with
  prod_{i<r}(d_i + 1) = r(n_2 - beta) + beta; the limit dimension is
  then forced by transversality of the two restricted systems.

The checker recomputes every derived spec and every virtual-dimension
side condition from the parent and the parameters; it trusts nothing
stored in the tree, and discharges leaves by rank (BaseCase) or table
lookup (ExceptionLookup).  The degeneration steps themselves are the
trusted inference rules.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import prod

from . import gf, interp
from .classify import SPECIAL, classify, normalize_degrees
from .model import (
    FatPointSpec,
    LinearSystemSpec,
    MultiDegree,
    NON_SPECIAL,
    expected_dimension,
    product_system,
    virtual_dimension,
)

BASE_CASE = "BaseCase"
CITATION = "Citation"
EXCEPTION_LOOKUP = "ExceptionLookup"
SIMPLE_DEG = "SimpleDeg"
DOUBLE_DEG = "DoubleDeg"

DEFAULT_PRODUCT_CAP = 5000

# child roles
L2_EMPTY = "l2Empty"
LHAT1 = "lhat1"
LHAT1_EMPTY = "lhat1Empty"
L2_BASE = "l2Base"
RES_HYPOTHESIS = "resHypothesis"
TRANSVERSALITY = "transversality"
L1 = "l1"


class PlanError(ValueError):
    pass


@dataclass(frozen=True)
class DegenerationParams:
    k: int
    n1: int
    n2: int
    beta: int = 0


@dataclass
class CertificateNode:
    spec: LinearSystemSpec
    dim: int
    rule: str
    params: DegenerationParams | None = None
    children: dict[str, "CertificateNode"] = field(default_factory=dict)
    evidence: dict | None = None

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.spec.degree.degrees

    @property
    def n(self) -> int:
        return self.spec.points.count


@dataclass
class CheckResult:
    failures: list[tuple[str, str]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def _doubles_spec(deg: tuple[int, ...], n: int) -> LinearSystemSpec:
    return product_system(MultiDegree(deg), n)


def base_step_covers(deg: tuple[int, ...]) -> bool:
    """The degree shapes whose non-speciality was verified by direct
    rank computation for every point count."""
    r = len(deg)
    if r in (2, 3):
        return all(d <= 6 for d in deg)
    if r == 4:
        if all(d <= 4 for d in deg):
            return True
        if deg[0] == deg[1] == 1 and deg[2] <= 6 and deg[3] <= 6:
            return True
        return deg == (2, 2, 2, 5)
    if r == 5:
        return deg[:4] == (1, 1, 1, 1) and deg[4] <= 5
    return False


def case2_params(deg: tuple[int, ...], n: int) -> DegenerationParams:
    """k=1 split: write prod_{i<r}(d_i+1) = r*(n2-beta) + beta with
    beta in {0..r-1}."""
    r = len(deg)
    s = prod(d + 1 for d in deg[:-1])
    m, beta = divmod(s, r)
    n2 = m + beta
    return DegenerationParams(k=1, n1=n - n2, n2=n2, beta=beta)


def case1_params(deg: tuple[int, ...], n: int) -> DegenerationParams:
    """k=r split: the low-degree component receives exactly enough
    points to have virtual dimension -1."""
    r = len(deg)
    n2 = prod(d + 1 for d in deg[:-1])
    return DegenerationParams(k=r, n1=n - n2, n2=n2, beta=0)


def _split_child_degrees(deg: tuple[int, ...], params: DegenerationParams):
    """Specs of the derived systems, before zero-degree normalization.

    Returns (l2, lhat1) degree tuples; degrees of the intersection-side
    systems are deg[:-1].
    """
    head = deg[:-1]
    l2 = head + (params.k,)
    lhat1 = head + (deg[-1] - params.k - 1,)
    return l2, lhat1


def _norm(deg: tuple[int, ...]) -> tuple[int, ...]:
    return normalize_degrees(deg)


def plan(degrees, n: int, *, product_cap: int = DEFAULT_PRODUCT_CAP) -> CertificateNode:
    """Build a certificate tree for the dimension of the double-point
    system, reproducing the published case analysis with a rank-based
    fallback when a branch's side conditions fail."""
    deg = _norm(degrees.degrees if hasattr(degrees, "degrees") else tuple(degrees))
    if n < 0:
        raise PlanError("n must be >= 0")
    return _plan(deg, n, 0, product_cap, {})


def _leaf(deg, n, dim, rule) -> CertificateNode:
    return CertificateNode(_doubles_spec(deg, n), dim, rule)


def _plan(deg: tuple[int, ...], n: int, depth: int, cap: int, memo) -> CertificateNode:
    if depth > sum(deg) + len(deg):
        raise PlanError(f"recursion too deep at {deg} n={n}")
    key = (deg, n)
    if key in memo:
        return memo[key]
    cls = classify(deg, n)
    if cls.status == SPECIAL:
        node = _leaf(deg, n, cls.dim, EXCEPTION_LOOKUP)
        memo[key] = node
        return node
    r = len(deg)
    sections = prod(d + 1 for d in deg)
    node = None
    if r == 1 or base_step_covers(deg):
        node = _leaf(deg, n, cls.dim, BASE_CASE)
    if node is None and r >= 6 and all(d == 1 for d in deg):
        rule = BASE_CASE if sections <= cap else CITATION
        node = _leaf(deg, n, cls.dim, rule)
    if node is None:
        node = _try_simple(deg, n, cls.dim, depth, cap, memo)
    if node is None:
        node = _try_double(deg, n, cls.dim, depth, cap, memo)
    if node is None:
        if sections > cap:
            raise PlanError(f"no rule applies to {deg} n={n} and the "
                            f"matrix ({sections} columns) exceeds the cap")
        node = _leaf(deg, n, cls.dim, BASE_CASE)
    memo[key] = node
    return node


def _simple_applicable(deg: tuple[int, ...]) -> bool:
    r = len(deg)
    if r in (2, 3):
        return deg[-1] >= 7
    if r == 4:
        if deg[:2] == (1, 1):
            return deg[3] >= 7
        if deg[:3] == (2, 2, 2):
            return deg[3] >= 6
        return False
    if r == 5:
        return deg[:4] == (1, 1, 1, 1) and deg[4] >= 6
    return False


def _try_simple(deg, n, dim, depth, cap, memo) -> CertificateNode | None:
    if not _simple_applicable(deg):
        return None
    params = case1_params(deg, n)
    if params.n1 < 0:
        return None
    l2_deg, lhat1_deg = _split_child_degrees(deg, params)
    try:
        l2_cls = classify(l2_deg, params.n2)
        lhat1_cls = classify(lhat1_deg, params.n1)
    except ValueError:
        return None
    # the low-degree component must be empty, the kernel system must be
    # non-special with the parent's expected dimension
    if l2_cls.dim != -1 or lhat1_cls.dim != dim:
        return None
    if l2_cls.status == SPECIAL or lhat1_cls.status == SPECIAL:
        return None
    try:
        children = {
            L2_EMPTY: _plan(_norm(l2_deg), params.n2, depth + 1, cap, memo),
            LHAT1: _plan(_norm(lhat1_deg), params.n1, depth + 1, cap, memo),
        }
    except PlanError:
        return None
    return CertificateNode(_doubles_spec(deg, n), dim, SIMPLE_DEG, params, children)


def _try_double(deg, n, dim, depth, cap, memo) -> CertificateNode | None:
    r = len(deg)
    if r < 4 or deg[-1] < 2:
        return None
    params = case2_params(deg, n)
    if params.n1 < 0:
        return None
    beta, n1, n2 = params.beta, params.n1, params.n2
    head = deg[:-1]
    _, lhat1_deg = _split_child_degrees(deg, params)
    l1_deg = head + (deg[-1] - 1,)
    claims = {
        LHAT1_EMPTY: (lhat1_deg, n1, -1),
        L2_BASE: (head, n2 - beta, max(beta - 1, -1)),
        TRANSVERSALITY: (l1_deg, n1 + beta, None),
        L1: (l1_deg, n1, None),
    }
    if beta > 0:
        claims[RES_HYPOTHESIS] = (head, n2, -1)
    # the root dimension the split forces: both kernels empty, so the
    # limit dimension is the dimension of the transversal intersection
    v_l1 = prod(d + 1 for d in l1_deg) - 1 - (r + 1) * n1
    dim_r1 = max(v_l1, -1)
    forced = max(dim_r1 - (n2 - beta) - r * beta, -1)
    if forced != dim:
        return None
    children = {}
    for role, (cdeg, cn, want) in claims.items():
        try:
            ccls = classify(cdeg, cn)
        except ValueError:
            return None
        if ccls.status == SPECIAL:
            return None
        if want is not None and ccls.dim != want:
            return None
        try:
            children[role] = _plan(_norm(cdeg), cn, depth + 1, cap, memo)
        except PlanError:
            return None
    return CertificateNode(_doubles_spec(deg, n), dim, DOUBLE_DEG, params, children)


# ---------------------------------------------------------------------------
# checking


def check(node: CertificateNode, *, p: int = gf.DEFAULT_PRIME, seed: int = 0,
          retries: int = 3, cache: dict | None = None) -> CheckResult:
    """Verify a certificate tree bottom-up, recomputing all derived
    specs and arithmetic side conditions; leaves are discharged by rank
    (BaseCase) or by the exception table (ExceptionLookup)."""
    failures: list[tuple[str, str]] = []
    if cache is None:
        cache = {}
    _check(node, "root", p, seed, retries, failures, cache)
    return CheckResult(failures)


def _fail(failures, path, msg):
    failures.append((path, msg))


def _leaf_rank(deg, n, p, seed, retries, cache):
    key = (deg, n, p)
    if key not in cache:
        cache[key] = interp.dim_linear_system(_doubles_spec(deg, n), seed, retries, p)
    return cache[key]


def _check(node, path, p, seed, retries, failures, cache):
    deg = node.degrees
    n = node.n
    if tuple(sorted(deg)) != deg or any(d < 1 for d in deg):
        _fail(failures, path, f"degrees {deg} not sorted positive")
        return
    if node.rule == BASE_CASE:
        report = _leaf_rank(deg, n, p, seed, retries, cache)
        node.evidence = {"prime": p, "seed": seed,
                         "rank": node.spec.projective_dim - report.computed}
        if report.status != NON_SPECIAL:
            _fail(failures, path, f"rank check not non-special (computed "
                                  f"{report.computed}, expected {report.expected})")
        elif report.computed != node.dim:
            _fail(failures, path, f"claimed dim {node.dim} != computed {report.computed}")
        return
    if node.rule == CITATION:
        if not (len(deg) >= 6 and all(d == 1 for d in deg)):
            _fail(failures, path, "citation leaf allowed only for the all-ones "
                                  "base in >= 6 factors")
        elif node.dim != expected_dimension(node.spec):
            _fail(failures, path, "citation leaf must claim the expected dimension")
        return
    if node.rule == EXCEPTION_LOOKUP:
        cls = classify(deg, n)
        if cls.status != SPECIAL:
            _fail(failures, path, f"{deg} with n={n} is not an exception")
        elif cls.dim != node.dim:
            _fail(failures, path, f"exception dim is {cls.dim}, claimed {node.dim}")
        return
    if node.rule == SIMPLE_DEG:
        _check_simple(node, path, p, seed, retries, failures, cache)
        return
    if node.rule == DOUBLE_DEG:
        _check_double(node, path, p, seed, retries, failures, cache)
        return
    _fail(failures, path, f"unknown rule {node.rule!r}")


def _child_spec_matches(child, deg, n) -> bool:
    return child.degrees == _norm(deg) and child.n == n


def _check_simple(node, path, p, seed, retries, failures, cache):
    deg, n = node.degrees, node.n
    r = len(deg)
    params = node.params
    if params is None:
        _fail(failures, path, "missing parameters")
        return
    expect = case1_params(deg, n)
    if params.k != r or params.n2 != expect.n2 or params.beta != 0:
        _fail(failures, path, f"parameters {params} violate the k=r split "
                              f"(want k={r}, n2={expect.n2})")
        return
    if params.n1 != n - params.n2 or params.n1 < 0:
        _fail(failures, path, f"point counts {params.n1}+{params.n2} != {n}")
        return
    l2_deg, lhat1_deg = _split_child_degrees(deg, params)
    v = virtual_dimension(node.spec)
    v_l2 = prod(d + 1 for d in l2_deg) - 1 - (r + 1) * params.n2
    v_lhat1 = prod(d + 1 for d in lhat1_deg) - 1 - (r + 1) * params.n1
    if v_l2 != -1:
        _fail(failures, path, f"split component has virtual dimension {v_l2}, not -1")
    if v_lhat1 != v:
        _fail(failures, path, f"kernel system virtual dimension {v_lhat1} != {v}")
    if node.dim != max(v, -1):
        _fail(failures, path, f"claimed dim {node.dim} != expected {max(v, -1)}")
    missing = {L2_EMPTY, LHAT1} - set(node.children)
    if missing:
        _fail(failures, path, f"missing children {sorted(missing)}")
        return
    l2 = node.children[L2_EMPTY]
    lhat1 = node.children[LHAT1]
    if not _child_spec_matches(l2, l2_deg, params.n2):
        _fail(failures, path, f"{L2_EMPTY} child spec does not match recomputation")
    elif l2.dim != -1:
        _fail(failures, path, f"{L2_EMPTY} child must claim emptiness, claims {l2.dim}")
    else:
        _check(l2, f"{path}/{L2_EMPTY}", p, seed, retries, failures, cache)
    if not _child_spec_matches(lhat1, lhat1_deg, params.n1):
        _fail(failures, path, f"{LHAT1} child spec does not match recomputation")
    elif lhat1.dim != node.dim:
        _fail(failures, path, f"{LHAT1} child claims {lhat1.dim}, need {node.dim}")
    else:
        _check(lhat1, f"{path}/{LHAT1}", p, seed, retries, failures, cache)


def _check_double(node, path, p, seed, retries, failures, cache):
    deg, n = node.degrees, node.n
    r = len(deg)
    params = node.params
    if params is None:
        _fail(failures, path, "missing parameters")
        return
    s = prod(d + 1 for d in deg[:-1])
    if params.k != 1:
        _fail(failures, path, f"k={params.k}, double degeneration needs k=1")
        return
    if not 0 <= params.beta < r:
        _fail(failures, path, f"beta={params.beta} outside 0..{r - 1}")
        return
    if r * (params.n2 - params.beta) + params.beta != s:
        _fail(failures, path, f"n2={params.n2}, beta={params.beta} do not "
                              f"balance the {s} intersection conditions")
        return
    if params.n1 != n - params.n2 or params.n1 < 0:
        _fail(failures, path, f"point counts {params.n1}+{params.n2} != {n}")
        return
    beta, n1, n2 = params.beta, params.n1, params.n2
    head = deg[:-1]
    lhat1_deg = head + (deg[-1] - 2,)
    l1_deg = head + (deg[-1] - 1,)
    v_l1 = prod(d + 1 for d in l1_deg) - 1 - (r + 1) * n1
    forced = max(max(v_l1, -1) - (n2 - beta) - r * beta, -1)
    if node.dim != forced:
        _fail(failures, path, f"claimed dim {node.dim}; transversal "
                              f"intersection forces {forced}")
    if node.dim != expected_dimension(node.spec):
        _fail(failures, path, "claimed dim is not the expected dimension")
    wanted = {
        LHAT1_EMPTY: (lhat1_deg, n1, -1),
        L2_BASE: (head, n2 - beta, max(beta - 1, -1)),
        TRANSVERSALITY: (l1_deg, n1 + beta, None),
        L1: (l1_deg, n1, None),
    }
    if beta > 0:
        wanted[RES_HYPOTHESIS] = (head, n2, -1)
    missing = set(wanted) - set(node.children)
    if missing:
        _fail(failures, path, f"missing children {sorted(missing)}")
        return
    for role, (cdeg, cn, want) in wanted.items():
        child = node.children[role]
        if not _child_spec_matches(child, cdeg, cn):
            _fail(failures, path, f"{role} child spec does not match recomputation")
            continue
        if want is None:
            want = expected_dimension(child.spec)
        if child.dim != want:
            _fail(failures, path, f"{role} child claims {child.dim}, need {want}")
            continue
        _check(child, f"{path}/{role}", p, seed, retries, failures, cache)


# ---------------------------------------------------------------------------
# JSON serialization


def _spec_to_dict(spec: LinearSystemSpec) -> dict:
    d = {"ambient": spec.ambient, "r": spec.r,
         "points": [list(e) for e in spec.points.entries]}
    if spec.ambient == "product":
        d["degrees"] = list(spec.degree.degrees)
    else:
        d["degree"] = spec.degree
    return d


def _spec_from_dict(d: dict) -> LinearSystemSpec:
    points = FatPointSpec(tuple((m, c) for m, c in d["points"]))
    if d["ambient"] == "product":
        return product_system(tuple(d["degrees"]), points)
    return LinearSystemSpec("projective", d["r"], d["degree"], points)


def node_to_dict(node: CertificateNode) -> dict:
    out = {
        "claim": {"spec": _spec_to_dict(node.spec), "dim": node.dim},
        "rule": node.rule,
        "params": None if node.params is None else {
            "k": node.params.k, "n1": node.params.n1,
            "n2": node.params.n2, "beta": node.params.beta},
        "children": {role: node_to_dict(c) for role, c in node.children.items()},
        "leafEvidence": node.evidence,
    }
    return out


def node_from_dict(d: dict) -> CertificateNode:
    params = d.get("params")
    return CertificateNode(
        spec=_spec_from_dict(d["claim"]["spec"]),
        dim=d["claim"]["dim"],
        rule=d["rule"],
        params=None if params is None else DegenerationParams(**params),
        children={role: node_from_dict(c) for role, c in d["children"].items()},
        evidence=d.get("leafEvidence"),
    )


def dumps(node: CertificateNode, **kwargs) -> str:
    return json.dumps(node_to_dict(node), **kwargs)


def loads(text: str) -> CertificateNode:
    return node_from_dict(json.loads(text))
