#!/usr/bin/env python3
"""Grafting and the partial orders it induces on tree shapes.

Grafting cuts a leaf edge off a degree-2 support and reattaches the leaf
one step further in.  The move never helps security, so iterating it from
a leader shape sweeps out a partially ordered set with a unique most- and
least-favorable structure.
"""

from gtsec.posets import Comparability, build_all_posets, build_poset, export_poset, is_comparable
from gtsec.security import verify_grafting_monotonicity
from gtsec.trees import canonical_code, graftable_edges, path, spider

# ----------------------------------------------------------------------
# 1. The complete order-7 classification
# ----------------------------------------------------------------------
posets, coverage = build_all_posets(7)
print(f"order 7: {len(posets)} posets, sizes {coverage.sizes}, "
      f"disjoint={coverage.disjoint}, all 11 classes covered={coverage.all_covered}")
for idx, p in enumerate(posets, 1):
    levels = [nd.level for nd in p.nodes]
    print(f"  poset {idx}: leader {p.leader.hex()[:12]}..., levels {levels}")
print()

# ----------------------------------------------------------------------
# 2. The diamond: two middle shapes that cannot be ordered
# ----------------------------------------------------------------------
diamond = build_poset(spider(1, 2, 3))
mids = [nd.code for nd in diamond.nodes if nd.level == 1]
print("diamond middles comparable?",
      is_comparable(diamond, mids[0], mids[1]) is not Comparability.INCOMPARABLE)
print("leader vs bottom:", is_comparable(diamond, diamond.leader, diamond.lf).value)
print()

# ----------------------------------------------------------------------
# 3. Monotonicity, checked by sampling
# ----------------------------------------------------------------------
t = path(7)
edge = graftable_edges(t)[0]
rep = verify_grafting_monotonicity(t, edge, trials=5000, k=0.5, seed=3)
print(f"path-7, end edge grafted, 5000 weight draws at fixed determinant:")
print(f"  violations of S(parent) >= S(child): {rep.violations}")
print(f"  margin range: [{rep.margin_min:.3e}, {rep.margin_max:.3e}]")
print()

# ----------------------------------------------------------------------
# 4. Export a diagram
# ----------------------------------------------------------------------
dot = export_poset(diamond, "dot")
print("DOT export of the diamond (render with graphviz):")
print(dot)
