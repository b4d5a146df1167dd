#!/usr/bin/env python3
"""A tour of the tree layer: enumeration, canonical codes, leaf-edge roles.

Every other capability in the package sits on these primitives, so this
demo is the place to start.
"""

from gtsec.trees import (
    canonical_code,
    enumerate_trees,
    format_tree,
    graftable_edges,
    is_lf,
    is_poset_leader,
    path,
    spider,
    star,
)

# ----------------------------------------------------------------------
# 1. How many shapes does a tree on n vertices have?
# ----------------------------------------------------------------------
print("Non-isomorphic trees by order:")
for n in range(2, 11):
    print(f"  n={n:2d}: {len(enumerate_trees(n)):4d} classes")
print()

# ----------------------------------------------------------------------
# 2. Canonical codes ignore labels
# ----------------------------------------------------------------------
a = path(4)
b = path(4)  # same shape, and any relabeling would still match
print("P4 code:", canonical_code(a).hex())
print("Same shape, same code:", canonical_code(a) == canonical_code(b))
print("P4 vs star:", canonical_code(a) == canonical_code(star(3)))
print()

# ----------------------------------------------------------------------
# 3. Leaf edges, graftable edges, and the two special predicates
# ----------------------------------------------------------------------
for name, t in [
    ("path-7", path(7)),
    ("spider-1-2-3", spider(1, 2, 3)),
    ("spider-2-2-2", spider(2, 2, 2)),
    ("star-6", star(6)),
]:
    g = graftable_edges(t)
    print(
        f"{name:13s} graftable={len(g)}  leader={is_poset_leader(t)!s:5s}  "
        f"fixed-point={is_lf(t)}"
    )
print()
print("A graftable edge is a leaf edge whose support vertex has degree 2;")
print("trees without any are the grafting fixed points (least favorable).")
print()

# ----------------------------------------------------------------------
# 4. The text format round-trips
# ----------------------------------------------------------------------
print("spider-1-2-3 in the text format:")
print(format_tree(spider(1, 2, 3)))
