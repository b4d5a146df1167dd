"""The maximin partial-correlation privacy metric and its experiments.

Two legitimate parties pick the vertex pair {a, b}; a single-vertex
eavesdropper answers with the worst z.  The metric is

    S = max over pairs {a,b} of  min over z  of  rho^2(a, b | z)

where rho^2 is the squared partial correlation, a monotone proxy for the
conditional mutual information via rho^2 = 1 - exp(-2 I).

Two scoring routes are kept deliberately separate: the exhaustive search
evaluates the general determinant-free formula on every (pair, z) triplet
of the covariance, while the restricted search ranges only over adjacent
pairs with z adjacent to either endpoint, scored straight from edge
weights.  Their value agreement is itself one of the verified claims.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .gaussian import WeightedTree, covariance_from_tree, sample_weight_matrix
from .trees import Tree, adjacency, canonical_code, degrees

__all__ = [
    "ALGEBRAIC_TOL",
    "MC_TOL",
    "TripletScore",
    "SecurityReport",
    "partial_correlation",
    "conditional_mi",
    "maximin_exhaustive",
    "maximin_restricted",
    "restricted_values_batch",
    "exhaustive_values_batch",
    "GraftMonotonicityReport",
    "verify_grafting_monotonicity",
    "CutPasteReport",
    "explore_cut_paste",
]

# exact-identity comparisons (algebra) vs Monte-Carlo inequality slack
ALGEBRAIC_TOL = 1e-12
MC_TOL = 1e-9


@dataclass(frozen=True)
class TripletScore:
    a: int
    b: int
    z: int
    rho2: float
    cmi: float


@dataclass
class SecurityReport:
    value: float
    argmax_pair: tuple[int, int]
    worst_z_for_pair: dict[tuple[int, int], int]
    per_pair_min: dict[tuple[int, int], float]
    table: tuple[TripletScore, ...]
    method: str

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "argmax_pair": list(self.argmax_pair),
            "per_pair_min": {f"{a},{b}": v for (a, b), v in self.per_pair_min.items()},
            "worst_z_for_pair": {f"{a},{b}": z for (a, b), z in self.worst_z_for_pair.items()},
            "method": self.method,
        }


def partial_correlation(cov: np.ndarray, a: int, b: int, z: int) -> float:
    """Squared partial correlation of (a, b) given z, for unit diagonals."""
    if len({a, b, z}) != 3:
        raise ValueError("a, b, z must be distinct")
    s_ab, s_az, s_bz = cov[a, b], cov[a, z], cov[b, z]
    if abs(s_az) >= 1.0 or abs(s_bz) >= 1.0:
        raise ValueError("conditioning vertex is perfectly correlated; matrix singular")
    num = (s_ab - s_az * s_bz) ** 2
    return num / ((1.0 - s_az * s_az) * (1.0 - s_bz * s_bz))


def conditional_mi(rho2: float) -> float:
    """Conditional mutual information in nats from a squared partial correlation."""
    if not 0.0 <= rho2 < 1.0:
        raise ValueError(f"rho^2 must lie in [0,1), got {rho2}")
    return -0.5 * math.log1p(-rho2)


def _report_from_scores(scores, method: str) -> SecurityReport:
    """Fold (a, b, z, rho2) scores; ties resolve to the lexicographically
    first pair and the smallest z because iteration is ordered and updates
    are strict."""
    per_pair_min: dict[tuple[int, int], float] = {}
    worst_z: dict[tuple[int, int], int] = {}
    table = []
    for a, b, z, rho2 in scores:
        table.append(TripletScore(a, b, z, rho2, conditional_mi(rho2)))
        key = (a, b)
        if key not in per_pair_min or rho2 < per_pair_min[key]:
            per_pair_min[key] = rho2
            worst_z[key] = z
    best_pair = None
    best = -1.0
    for key in per_pair_min:  # insertion order is lexicographic
        if per_pair_min[key] > best:
            best = per_pair_min[key]
            best_pair = key
    return SecurityReport(best, best_pair, worst_z, per_pair_min, tuple(table), method)


def maximin_exhaustive(wt: WeightedTree) -> SecurityReport:
    """Evaluate every unordered pair against every conditioning vertex."""
    n = wt.tree.n
    if n < 3:
        raise ValueError("maximin needs at least 3 vertices")
    cov = covariance_from_tree(wt)
    scores = []
    for a in range(n):
        for b in range(a + 1, n):
            for z in range(n):
                if z in (a, b):
                    continue
                scores.append((a, b, z, partial_correlation(cov, a, b, z)))
    return _report_from_scores(scores, "exhaustive")


def _adjacent_triplets(t: Tree) -> list[tuple[int, int, int, str]]:
    """(a, b, z, side) for adjacent pairs and z adjacent to a or b."""
    adj = adjacency(t)
    triplets = []
    for a, b in t.edges:
        zs = []
        for z in adj[a]:
            if z != b:
                zs.append((z, "a"))
        for z in adj[b]:
            if z != a:
                zs.append((z, "b"))
        for z, side in sorted(zs):
            triplets.append((a, b, z, side))
    return triplets


def maximin_restricted(wt: WeightedTree) -> SecurityReport:
    """Adjacent-pair search scored directly from edge weights.

    For the pair (a, b) with z adjacent to b, the score is
    w_ab^2 (1 - w_bz^2) / (1 - w_ab^2 w_bz^2); the roles of a and b swap
    when z sits next to a.
    """
    if wt.tree.n < 3:
        raise ValueError("maximin needs at least 3 vertices")
    scores = []
    for a, b, z, side in _adjacent_triplets(wt.tree):
        w_ab = wt.weight(a, b)
        w_z = wt.weight(a, z) if side == "a" else wt.weight(b, z)
        rho2 = w_ab * w_ab * (1.0 - w_z * w_z) / (1.0 - w_ab * w_ab * w_z * w_z)
        scores.append((a, b, z, rho2))
    return _report_from_scores(scores, "restricted")


# ---------------------------------------------------------------------------
# Vectorized batch evaluation over many weight rows
# ---------------------------------------------------------------------------


def restricted_values_batch(t: Tree, weight_rows: np.ndarray) -> np.ndarray:
    """Restricted maximin value for each row of edge weights."""
    edge_idx = {frozenset(e): i for i, e in enumerate(t.edges)}
    pair_mins = []
    current_pair = None
    stacks: list[list[np.ndarray]] = []
    for a, b, z, side in _adjacent_triplets(t):
        w_ab = weight_rows[:, edge_idx[frozenset((a, b))]]
        zkey = frozenset((a, z)) if side == "a" else frozenset((b, z))
        w_z = weight_rows[:, edge_idx[zkey]]
        rho2 = w_ab**2 * (1.0 - w_z**2) / (1.0 - w_ab**2 * w_z**2)
        if (a, b) != current_pair:
            current_pair = (a, b)
            stacks.append([])
        stacks[-1].append(rho2)
    for group in stacks:
        pair_mins.append(np.minimum.reduce(group))
    return np.maximum.reduce(pair_mins)


def exhaustive_values_batch(t: Tree, weight_rows: np.ndarray):
    """Exhaustive maximin per weight row.

    Returns (values, argmax pair indices, worst z for that pair, pair list)
    so callers can classify which triplet realized the metric.
    """
    n = t.n
    edge_idx = {frozenset(e): i for i, e in enumerate(t.edges)}
    adj = adjacency(t)
    # per-vertex-pair path edge lists for path-product correlations
    paths: dict[tuple[int, int], list[int]] = {}
    for root in range(n):
        parent = {root: None}
        order = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in parent:
                    parent[v] = u
                    order.append(v)
                    stack.append(v)
        for v in order[1:]:
            if root < v:
                back = []
                w = v
                while w != root:
                    back.append(edge_idx[frozenset((w, parent[w]))])
                    w = parent[w]
                paths[(root, v)] = back
    trials = weight_rows.shape[0]
    corr = {}
    for (i, j), cols in paths.items():
        corr[(i, j)] = np.prod(weight_rows[:, cols], axis=1)

    def sigma(i, j):
        return corr[(i, j)] if i < j else corr[(j, i)]

    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    mins = np.empty((trials, len(pairs)))
    worst_z = np.empty((trials, len(pairs)), dtype=int)
    for p_idx, (a, b) in enumerate(pairs):
        zs = [z for z in range(n) if z not in (a, b)]
        vals = np.empty((trials, len(zs)))
        for z_idx, z in enumerate(zs):
            s_ab, s_az, s_bz = sigma(a, b), sigma(a, z), sigma(b, z)
            vals[:, z_idx] = (s_ab - s_az * s_bz) ** 2 / (
                (1.0 - s_az**2) * (1.0 - s_bz**2)
            )
        z_arg = np.argmin(vals, axis=1)
        mins[:, p_idx] = vals[np.arange(trials), z_arg]
        worst_z[:, p_idx] = np.asarray(zs)[z_arg]
    pair_arg = np.argmax(mins, axis=1)
    values = mins[np.arange(trials), pair_arg]
    worst = worst_z[np.arange(trials), pair_arg]
    return values, pair_arg, worst, pairs


# ---------------------------------------------------------------------------
# Monte-Carlo harnesses
# ---------------------------------------------------------------------------


@dataclass
class GraftMonotonicityReport:
    parent_code: str
    child_code: str
    cut_edge: tuple[int, int]
    trials: int
    k: float
    seed: int
    violations: int
    equal_within_tol: int
    margin_min: float
    margin_mean: float
    margin_max: float

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_json(self) -> dict:
        return {
            "parent": self.parent_code,
            "child": self.child_code,
            "cut_edge": list(self.cut_edge),
            "trials": self.trials,
            "k": self.k,
            "seed": self.seed,
            "violations": self.violations,
            "equal_within_tol": self.equal_within_tol,
            "margin": {
                "min": self.margin_min,
                "mean": self.margin_mean,
                "max": self.margin_max,
            },
        }


def verify_grafting_monotonicity(
    t1: Tree, graft_edge, trials: int, k: float = 0.5, seed: int = 0
) -> GraftMonotonicityReport:
    """Sample weights on t1, carry them through the graft, and count
    violations of S(parent) >= S(child) - tol (expected none: the move only
    hands the eavesdropper a better position)."""
    deg = degrees(t1)
    if not (graft_edge.is_leaf_edge and deg[graft_edge.support] == 2):
        raise ValueError(f"edge {graft_edge.endpoints} is not graftable")
    n1, n2 = graft_edge.support, graft_edge.leaf
    v = next(w for w in adjacency(t1)[n1] if w != n2)
    moved = tuple(e for e in t1.edges if set(e) != {n1, n2}) + ((v, n2),)
    t2 = Tree(t1.n, moved)
    col_map = _transfer_column_map(t1, t2, (n1, n2), (v, n2))

    rows = sample_weight_matrix(t1, k, trials, seed)
    s1 = restricted_values_batch(t1, rows)
    s2 = restricted_values_batch(t2, rows[:, col_map])
    margins = s1 - s2
    return GraftMonotonicityReport(
        parent_code=canonical_code(t1).hex(),
        child_code=canonical_code(t2).hex(),
        cut_edge=(n1, n2),
        trials=trials,
        k=k,
        seed=seed,
        violations=int(np.sum(margins < -MC_TOL)),
        equal_within_tol=int(np.sum(np.abs(margins) <= MC_TOL)),
        margin_min=float(margins.min()),
        margin_mean=float(margins.mean()),
        margin_max=float(margins.max()),
    )


def _transfer_column_map(t1: Tree, t2: Tree, cut: tuple[int, int], new_edge: tuple[int, int]):
    """Column permutation sending t1's weight layout to t2's, with the cut
    edge's weight landing on the new edge."""
    src = {frozenset(e): i for i, e in enumerate(t1.edges)}
    src[frozenset(new_edge)] = src.pop(frozenset(cut))
    return np.array([src[frozenset(e)] for e in t2.edges])


@dataclass
class CutPasteCase:
    trials: int
    s1_gt_s2: int
    s2_gt_s1: int
    equal: int
    # trials contradicting the case's claimed weak direction
    violations: int

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "s1_gt_s2": self.s1_gt_s2,
            "s2_gt_s1": self.s2_gt_s1,
            "equal": self.equal,
            "violations": self.violations,
        }


@dataclass
class CutPasteReport:
    t1_code: str
    t2_code: str
    cut_edge: tuple[int, int]
    paste_at: int
    trials: int
    k: float
    seed: int
    s1_gt_s2: int
    s2_gt_s1: int
    equal: int
    # metric realized on (old support, reattachment target) with the moved
    # leaf as the worst conditioning vertex: claimed direction S2 >= S1
    case_metric_on_cut: CutPasteCase
    # metric realized on a pair containing the paste vertex, away from the
    # moved edge: claimed direction S1 >= S2
    case_metric_at_paste: CutPasteCase

    @property
    def both_orders_observed(self) -> bool:
        return self.s1_gt_s2 > 0 and self.s2_gt_s1 > 0

    def to_json(self) -> dict:
        return {
            "t1": self.t1_code,
            "t2": self.t2_code,
            "cut_edge": list(self.cut_edge),
            "paste_at": self.paste_at,
            "trials": self.trials,
            "k": self.k,
            "seed": self.seed,
            "s1_gt_s2": self.s1_gt_s2,
            "s2_gt_s1": self.s2_gt_s1,
            "equal": self.equal,
            "both_orders_observed": self.both_orders_observed,
            "case_metric_on_cut": self.case_metric_on_cut.to_json(),
            "case_metric_at_paste": self.case_metric_at_paste.to_json(),
        }


def explore_cut_paste(
    t1: Tree, cut_edge, paste_at: int, trials: int, k: float = 0.5, seed: int = 0
) -> CutPasteReport:
    """Tally both orderings of S under a general cut-and-paste move.

    Unlike grafting, pasting the leaf somewhere other than the sibling
    edge's far endpoint does not order the two trees: which direction wins
    depends on the weights.  Trials are additionally split by where the
    parent's metric was realized, since the two claimed regimes pull in
    opposite directions (metric on the abandoned support favors the new
    tree; metric already at the paste vertex can only lose from the new
    neighbor).
    """
    deg = degrees(t1)
    a, b = cut_edge.endpoints if hasattr(cut_edge, "endpoints") else cut_edge
    if deg[a] == 1 and deg[b] != 1:
        leaf, support = a, b
    elif deg[b] == 1:
        leaf, support = b, a
    else:
        raise ValueError(f"({a},{b}) is not a leaf edge")
    if not 0 <= paste_at < t1.n or paste_at == leaf:
        raise ValueError(f"invalid paste vertex {paste_at}")

    if paste_at == support:
        t2 = t1
        col_map = np.arange(len(t1.edges))
    else:
        moved = tuple(e for e in t1.edges if set(e) != {leaf, support}) + ((paste_at, leaf),)
        t2 = Tree(t1.n, moved)
        col_map = _transfer_column_map(t1, t2, (support, leaf), (paste_at, leaf))

    # sibling edge's far endpoint, defined when the support has degree 2
    def2_target = None
    if deg[support] == 2:
        def2_target = next(w for w in adjacency(t1)[support] if w != leaf)

    rows = sample_weight_matrix(t1, k, trials, seed)
    s1, pair_arg, worst_z, pairs = exhaustive_values_batch(t1, rows)
    s2 = exhaustive_values_batch(t2, rows[:, col_map])[0] if paste_at != support else s1
    margins = s1 - s2

    greater = margins > MC_TOL
    less = margins < -MC_TOL
    equal = ~greater & ~less

    pair_a = np.asarray([p[0] for p in pairs])[pair_arg]
    pair_b = np.asarray([p[1] for p in pairs])[pair_arg]
    on_cut = np.zeros(trials, dtype=bool)
    if def2_target is not None:
        on_cut = (
            ((pair_a == support) & (pair_b == def2_target))
            | ((pair_a == def2_target) & (pair_b == support))
        ) & (worst_z == leaf)
    at_paste = ((pair_a == paste_at) | (pair_b == paste_at)) & ~on_cut
    at_paste &= (pair_a != leaf) & (pair_b != leaf) & (pair_a != support) & (pair_b != support)

    def case_stats(mask: np.ndarray, claimed: str) -> CutPasteCase:
        viol = less if claimed == "s1_ge_s2" else greater
        return CutPasteCase(
            trials=int(mask.sum()),
            s1_gt_s2=int((greater & mask).sum()),
            s2_gt_s1=int((less & mask).sum()),
            equal=int((equal & mask).sum()),
            violations=int((viol & mask).sum()),
        )

    return CutPasteReport(
        t1_code=canonical_code(t1).hex(),
        t2_code=canonical_code(t2).hex(),
        cut_edge=(support, leaf),
        paste_at=paste_at,
        trials=trials,
        k=k,
        seed=seed,
        s1_gt_s2=int(greater.sum()),
        s2_gt_s1=int(less.sum()),
        equal=int(equal.sum()),
        case_metric_on_cut=case_stats(on_cut, "s2_ge_s1"),
        case_metric_at_paste=case_stats(at_paste, "s1_ge_s2"),
    )
