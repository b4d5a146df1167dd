#!/usr/bin/env python3
"""The maximin security game on a weighted tree.

Two parties pick the best vertex pair; a single-vertex eavesdropper picks
the worst conditioning vertex against them.  The value of the game is the
squared partial correlation the pair can still rely on.
"""

import numpy as np

from gtsec.gaussian import WeightedTree, covariance_from_tree, sample_weights
from gtsec.security import (
    conditional_mi,
    maximin_exhaustive,
    maximin_restricted,
    partial_correlation,
)
from gtsec.trees import path, spider

# ----------------------------------------------------------------------
# 1. One triplet by hand
# ----------------------------------------------------------------------
wt = WeightedTree(path(3), (0.3, 0.6))  # 0 -(0.3)- 1 -(0.6)- 2
cov = covariance_from_tree(wt)
rho2 = partial_correlation(cov, 1, 2, 0)
print(f"pair (1,2) against z=0: rho^2 = {rho2:.6f}")
print(f"  as conditional mutual information: {conditional_mi(rho2):.6f} nats")
print()

# ----------------------------------------------------------------------
# 2. Equal weights make every shape score w^2/(1+w^2)
# ----------------------------------------------------------------------
for w in (0.3, 0.5, 0.8):
    vals = set()
    for t in (path(7), spider(1, 2, 3), spider(2, 2, 2)):
        vals.add(round(maximin_exhaustive(WeightedTree.uniform(t, w)).value, 12))
    print(f"w={w}: maximin value(s) across shapes: {sorted(vals)}  "
          f"(w^2/(1+w^2) = {w*w/(1+w*w):.12f})")
print("With equal weights the topology does not matter; differences only")
print("appear once weights vary while total randomness is held fixed.")
print()

# ----------------------------------------------------------------------
# 3. Random weights at a fixed determinant: full report
# ----------------------------------------------------------------------
t = spider(1, 2, 3)
wt = sample_weights(t, k=0.5, seed=20240807)
rep = maximin_exhaustive(wt)
print("random model on spider-1-2-3 (determinant pinned to 0.5):")
print(f"  value       : {rep.value:.6f}")
print(f"  best pair   : {rep.argmax_pair}")
print(f"  eve's reply : z={rep.worst_z_for_pair[rep.argmax_pair]}")
print()

# ----------------------------------------------------------------------
# 4. The restricted search agrees with the exhaustive one
# ----------------------------------------------------------------------
gaps = []
for seed in range(200):
    wt = sample_weights(t, k=0.5, seed=seed)
    gaps.append(abs(maximin_exhaustive(wt).value - maximin_restricted(wt).value))
print(f"restricted vs exhaustive over 200 random models: max gap {max(gaps):.2e}")
print("The winning triplet always has the pair adjacent and the eavesdropper")
print("next to one of them, so the cheap adjacent-only search is exact.")
