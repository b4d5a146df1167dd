"""Independent brute-force oracles used to pin expected values.

Nothing here goes through canonical codes: isomorphism classes are decided
by explicit orbit computation under all vertex permutations, and subtree
polynomials by literal edge-subset scans.  Slow on purpose.
"""

from __future__ import annotations

import itertools

from gtsec.trees import Tree, from_prufer


def edge_set(t: Tree) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(e) for e in t.edges)


def relabel_edges(edges, perm) -> frozenset[frozenset[int]]:
    return frozenset(frozenset((perm[u], perm[v])) for u, v in edges)


def isomorphism_orbit(t: Tree) -> set[frozenset[frozenset[int]]]:
    """All labeled edge sets reachable from t by permuting vertices."""
    orbit = set()
    for perm in itertools.permutations(range(t.n)):
        orbit.add(relabel_edges(t.edges, perm))
    return orbit


def classes_by_orbit(n: int) -> list[Tree]:
    """Isomorphism classes of order-n trees via Pruefer generation plus
    orbit membership tests (no canonical encoding involved)."""
    if n == 2:
        return [Tree(2, ((0, 1),))]
    reps: list[Tree] = []
    known: set[frozenset[frozenset[int]]] = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        t = from_prufer(seq, n)
        key = edge_set(t)
        if key in known:
            continue
        reps.append(t)
        known |= isomorphism_orbit(t)
    return reps


def are_isomorphic_bruteforce(a: Tree, b: Tree) -> bool:
    if a.n != b.n:
        return False
    target = edge_set(b)
    return any(
        relabel_edges(a.edges, perm) == target
        for perm in itertools.permutations(range(a.n))
    )


def distance_profile(t: Tree):
    """Sorted multiset of per-vertex sorted distance vectors.

    Permutation-invariant, so differing profiles certify non-isomorphism
    even where full permutation search is infeasible.
    """
    adj = {v: [] for v in range(t.n)}
    for u, v in t.edges:
        adj[u].append(v)
        adj[v].append(u)
    profile = []
    for s in range(t.n):
        dist = {s: 0}
        queue = [s]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        profile.append(tuple(sorted(dist.values())))
    return sorted(profile)


def subtree_terms_bruteforce(t: Tree) -> dict[tuple[int, int], int]:
    """Subtree generating terms by scanning every edge subset.

    Returns {(edge_count, internal_edge_count): multiplicity} over all
    connected edge subsets, plus the single empty subtree at (0, 0).
    """
    terms: dict[tuple[int, int], int] = {(0, 0): 1}
    m = len(t.edges)
    for mask in range(1, 1 << m):
        chosen = [t.edges[i] for i in range(m) if mask >> i & 1]
        verts = {u for e in chosen for u in e}
        # connectivity of the chosen edge subgraph
        adj = {v: [] for v in verts}
        for u, v in chosen:
            adj[u].append(v)
            adj[v].append(u)
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(verts):
            continue
        deg = {v: len(adj[v]) for v in verts}
        leaf_edge_count = sum(1 for u, v in chosen if deg[u] == 1 or deg[v] == 1)
        key = (len(chosen), len(chosen) - leaf_edge_count)
        terms[key] = terms.get(key, 0) + 1
    return terms
