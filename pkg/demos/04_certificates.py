"""Degeneration certificates: machine-checkable proofs of non-speciality.

For systems too large to trust a single random evaluation, an inductive
argument degenerates the last P^1 factor and splits the points between the
two components.  Two splits cover everything:

* the k = r split ("SimpleDeg"): the low-degree component absorbs exactly
  enough points to become empty, and the residual system has the same
  virtual dimension as the original;
* the k = 1 split ("DoubleDeg"): a finer count with beta points pushed onto
  the intersection divisor, used when the last degree is small.

plan() builds the recursion tree down to directly-verified base cases, and
check() re-derives every claim: parameter identities, child specs, and leaf
dimensions (by interpolation or by the classification table).  The tree
serializes to JSON, so a certificate can be stored, shipped, and re-checked.
"""

import json

from fatpoints import check, plan
from fatpoints.degen import dumps, node_to_dict


def show(node, role="root", depth=0):
    spec = node.spec
    pts = spec.points.count
    name = f"L_{spec.degree.degrees if spec.ambient == 'product' else spec.degree}(2^{pts})"
    extra = ""
    if node.params is not None:
        p = node.params
        extra = f"  [k={p.k}, n1={p.n1}, n2={p.n2}, beta={p.beta}]"
    print(f"  {'  ' * depth}{role}: {name} dim={node.dim} via {node.rule}{extra}")
    for child_role, child in sorted(node.children.items()):
        show(child, child_role, depth + 1)


for degrees, n in [((2, 2, 2, 6), 37), ((1, 2, 2, 7), 28)]:
    node = plan(degrees, n)
    print(f"certificate for L_{degrees}(2^{n}):")
    show(node)
    res = check(node)
    print(f"  check: {'OK' if res.ok else res.failures}")
    print()

node = plan((2, 2, 2, 6), 37)
doc = node_to_dict(node)
doc["params"]["n2"] = 12  # tamper with it
from fatpoints.degen import node_from_dict

res = check(node_from_dict(doc))
print("a tampered certificate is rejected:")
for path, msg in res.failures[:2]:
    print(f"  {path}: {msg}")

print()
print("wire format (truncated):")
print(dumps(node)[:240] + " ...")
