"""Gaussian joint models on trees: covariance, determinant, entropy, sampling.

A weighted tree induces a jointly Gaussian vector whose correlation between
two vertices is the product of edge weights along their connecting path.
Models are compared at equal total randomness, i.e. equal covariance
determinant; the weight sampler draws from the exact constraint surface
prod(1 - w_e^2) = k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .trees import Tree, adjacency, degrees

__all__ = [
    "WeightedTree",
    "covariance_from_tree",
    "covariance_to_json",
    "determinant_closed_form",
    "entropy",
    "sample_weights",
    "sample_weight_matrix",
    "transfer_weights_cut_paste",
    "parse_weighted_tree",
    "format_weighted_tree",
]

# reject magnitudes this close to 1 so sampled covariances stay comfortably PD
_MAX_WEIGHT = 1.0 - 1e-9


@dataclass(frozen=True)
class WeightedTree:
    """Tree plus one correlation weight per edge, each in (-1, 1) \\ {0}.

    Weights are stored aligned with ``tree.edges`` (which is sorted), so
    equality and hashing behave like the underlying labeled object.
    """

    tree: Tree
    weights: tuple[float, ...]

    def __post_init__(self):
        if len(self.weights) != len(self.tree.edges):
            raise ValueError("need exactly one weight per edge")
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        for (u, v), w in zip(self.tree.edges, self.weights):
            if not 0.0 < abs(w) < 1.0:
                raise ValueError(f"weight {w} on edge ({u},{v}) outside (-1,1) or zero")

    @classmethod
    def from_mapping(cls, tree: Tree, mapping) -> "WeightedTree":
        items = {frozenset(e): float(w) for e, w in dict(mapping).items()}
        if len(items) != len(tree.edges):
            raise ValueError("need exactly one weight per edge")
        try:
            weights = tuple(items[frozenset(e)] for e in tree.edges)
        except KeyError as missing:
            raise ValueError(f"no weight for edge {set(missing.args[0])}") from None
        return cls(tree, weights)

    @classmethod
    def uniform(cls, tree: Tree, w: float) -> "WeightedTree":
        return cls(tree, (w,) * len(tree.edges))

    def as_mapping(self) -> dict[tuple[int, int], float]:
        return dict(zip(self.tree.edges, self.weights))

    def weight(self, u: int, v: int) -> float:
        for e, w in zip(self.tree.edges, self.weights):
            if set(e) == {u, v}:
                return w
        raise KeyError(f"({u},{v}) is not an edge")


def covariance_from_tree(wt: WeightedTree, diagonals=None) -> np.ndarray:
    """Covariance matrix with path-product off-diagonal structure.

    With the default unit diagonals, entry (i, j) is the product of edge
    weights along the unique i-j path.  With explicit positive diagonals
    d, the entries scale as sigma_ij = r_ij * sqrt(d_i d_j) where r is the
    unit-diagonal matrix, which keeps the tree's conditional-independence
    pattern intact.
    """
    t = wt.tree
    n = t.n
    wmap = {frozenset(e): w for e, w in zip(t.edges, wt.weights)}
    adj = adjacency(t)
    rho = np.eye(n)
    for root in range(n):
        stack = [root]
        seen = {root}
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    rho[root, v] = rho[root, u] * wmap[frozenset((u, v))]
                    stack.append(v)
    if diagonals is None:
        return rho
    d = np.asarray(diagonals, dtype=float)
    if d.shape != (n,) or np.any(d <= 0):
        raise ValueError("diagonals must be n positive reals")
    scale = np.sqrt(d)
    sigma = rho * np.outer(scale, scale)
    return sigma


def covariance_to_json(cov: np.ndarray) -> str:
    """Covariance matrix as a JSON array of rows."""
    import json

    return json.dumps(np.asarray(cov, dtype=float).tolist())


def determinant_closed_form(wt: WeightedTree, diagonals=None) -> float:
    """Edge-factorized determinant of the tree covariance.

    Unit diagonals give prod over edges of (1 - w_e^2).  General positive
    diagonals give

        prod_{(i,j) in E} (d_i d_j - sigma_ij^2)  /  prod_i d_i^(deg_i - 1)

    with sigma_ij = w_ij * sqrt(d_i d_j); this equals the dense determinant
    of :func:`covariance_from_tree` for the same inputs.
    """
    if diagonals is None:
        return math.prod(1.0 - w * w for w in wt.weights)
    d = np.asarray(diagonals, dtype=float)
    if d.shape != (wt.tree.n,) or np.any(d <= 0):
        raise ValueError("diagonals must be n positive reals")
    deg = degrees(wt.tree)
    num = math.prod(
        d[u] * d[v] - (w * math.sqrt(d[u] * d[v])) ** 2
        for (u, v), w in zip(wt.tree.edges, wt.weights)
    )
    den = math.prod(d[v] ** (deg[v] - 1) for v in range(wt.tree.n))
    return num / den


def entropy(n: int, det: float) -> float:
    """Joint entropy in nats of an n-dimensional Gaussian with |Sigma| = det."""
    if det <= 0:
        raise ValueError(f"determinant must be positive, got {det}")
    return 0.5 * (n * math.log(2.0 * math.pi * math.e) + math.log(det))


def sample_weight_matrix(t: Tree, k: float, trials: int, seed) -> np.ndarray:
    """``trials`` x ``m`` weight rows, each satisfying prod(1 - w^2) = k.

    Splits -ln k across the edges via a flat Dirichlet draw u and sets
    w_e = +/- sqrt(1 - exp(-u_e)) with independent uniform signs, so the
    determinant constraint holds exactly (up to rounding) with full
    support and no rejection in the generic case.  Deterministic given
    (seed, trials).
    """
    if not 0.0 < k < 1.0:
        raise ValueError(f"determinant target must be in (0,1), got {k}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    m = len(t.edges)
    rng = np.random.default_rng(seed)
    total = -math.log(k)
    rows = np.empty((trials, m))
    filled = 0
    while filled < trials:
        want = trials - filled
        u = rng.dirichlet(np.ones(m), size=want) * total
        w = np.sqrt(-np.expm1(-u))
        ok = np.all((w > 0.0) & (w < _MAX_WEIGHT), axis=1)
        good = w[ok]
        rows[filled : filled + len(good)] = good
        filled += len(good)
    signs = rng.integers(0, 2, size=(trials, m)) * 2 - 1
    return rows * signs


def sample_weights(t: Tree, k: float, seed) -> WeightedTree:
    """One weight assignment on the exact determinant-k surface."""
    row = sample_weight_matrix(t, k, 1, seed)[0]
    return WeightedTree(t, tuple(row))


def transfer_weights_cut_paste(wt: WeightedTree, cut: tuple[int, int], paste_at: int) -> WeightedTree:
    """Move a leaf edge to a new support, carrying its weight along.

    ``cut`` must be a leaf edge; the leaf endpoint reattaches at
    ``paste_at`` with the same weight, which leaves the determinant
    factor (1 - w^2) untouched, hence the determinant exactly preserved.
    ``paste_at`` equal to the old support is the identity move.
    """
    t = wt.tree
    deg = degrees(t)
    a, b = cut
    if not any(set(e) == {a, b} for e in t.edges):
        raise ValueError(f"({a},{b}) is not an edge")
    if deg[a] == 1 and deg[b] != 1:
        leaf, old_support = a, b
    elif deg[b] == 1:
        leaf, old_support = b, a
    else:
        raise ValueError(f"({a},{b}) is not a leaf edge")
    if not 0 <= paste_at < t.n or paste_at == leaf:
        raise ValueError(f"invalid paste vertex {paste_at}")
    if paste_at == old_support:
        return wt
    moved_w = wt.weight(leaf, old_support)
    mapping = {e: w for e, w in wt.as_mapping().items() if set(e) != {leaf, old_support}}
    mapping[(paste_at, leaf)] = moved_w
    new_tree = Tree(t.n, tuple(mapping.keys()))
    return WeightedTree.from_mapping(new_tree, mapping)


# ---------------------------------------------------------------------------
# Text format: first line n, then n-1 lines "u v w"
# ---------------------------------------------------------------------------


def parse_weighted_tree(text: str) -> WeightedTree:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty weighted-tree description")
    n = int(lines[0])
    edges = []
    weights = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"expected 'u v w' per edge line, got {ln!r}")
        u, v, w = int(parts[0]), int(parts[1]), float(parts[2])
        edges.append((u, v))
        weights[(u, v)] = w
    return WeightedTree.from_mapping(Tree(n, tuple(edges)), weights)


def format_weighted_tree(wt: WeightedTree) -> str:
    lines = [str(wt.tree.n)]
    lines.extend(f"{u} {v} {w!r}" for (u, v), w in zip(wt.tree.edges, wt.weights))
    return "\n".join(lines) + "\n"
