"""Exact bivariate subtree polynomials and their grafting recursion.

The unrooted polynomial of a tree is the generating function of its
subtrees, graded by edge count (variable t) and internal-edge count
(variable y, where y stands for z+1):

    f(T) = sum over subtrees S of  t^{|E(S)|} * y^{|E(S)| - #leaf edges of S}

with a single empty subtree contributing the constant 1 and isolated
vertices contributing nothing.  Because any connected subgraph of a tree
is determined by its vertex set, subtrees are enumerated as connected
vertex subsets.

The rooted companion polynomial ranges over subtrees containing a marked
root (the bare root contributing 1); edges incident to a degree-1 vertex
of S count as leaf edges *unless* that vertex is the root.  This root
convention is the one under which the grafting recursion below holds; it
is pinned by the path-4 and path-5 instances in the test suite.

Along a grafting chain T_0 -> ... -> T_m the polynomials satisfy

    f(T_0) = f(T_m) + t(1-tz) * [m - sum_k g_k]        (z = y - 1)

where g_k is the rooted polynomial of step k's off-tree: the tree left
after deleting the moved leaf and its old support from the step's parent,
rooted at the reattachment vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, NamedTuple

from .posets import Poset
from .trees import (
    CanonicalCode,
    Tree,
    adjacency,
    canonical_code,
    degrees,
    graftable_edges,
    leaf_edges,
)

__all__ = [
    "BiPoly",
    "AlphaBeta",
    "unrooted_poly",
    "rooted_poly",
    "alpha_beta",
    "verify_recursion",
    "audit_distinctness",
    "DistinctnessReport",
]


class BiPoly:
    """Sparse exact-integer polynomial in (t, y).

    Immutable by convention: all arithmetic returns new values.  Zero
    coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self._c = {k: v for k, v in (coeffs or {}).items() if v != 0}

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    def coefficient(self, ti: int, yj: int) -> int:
        return self._c.get((ti, yj), 0)

    def terms(self) -> list[tuple[int, int, int]]:
        """(t_degree, y_degree, coefficient) sorted descending by (t, y)."""
        return [(i, j, self._c[(i, j)]) for i, j in sorted(self._c, reverse=True)]

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) - v
        return BiPoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPoly({k: v * other for k, v in self._c.items()})
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._c.items():
            for (i2, j2), c2 in other._c.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def evaluate(self, t: float, y: float) -> float:
        return sum(c * t**i * y**j for (i, j), c in self._c.items())

    def z_form(self) -> "BiPoly":
        """Substitute y = z + 1; the result's second variable is z."""
        out: dict[tuple[int, int], int] = {}
        for (i, j), c in self._c.items():
            for k in range(j + 1):
                key = (i, k)
                out[key] = out.get(key, 0) + c * comb(j, k)
        return BiPoly(out)

    def __str__(self) -> str:
        return self.to_text("y")

    def to_text(self, var2: str = "y") -> str:
        if not self._c:
            return "0"
        parts = []
        for i, j, c in self.terms():
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i == 1:
                factors.append("t")
            elif i > 1:
                factors.append(f"t^{i}")
            if j == 1:
                factors.append(var2)
            elif j > 1:
                factors.append(f"{var2}^{j}")
            mono = "*".join(factors)
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(f"+ {mono}" if c > 0 else f"- {mono}")
        return " ".join(parts)

    def to_json(self) -> str:
        return json.dumps([[i, j, c] for i, j, c in self.terms()])

    @classmethod
    def from_json(cls, text: str) -> "BiPoly":
        return cls({(i, j): c for i, j, c in json.loads(text)})


def _connected_subsets(adj: list[list[int]], anchor: int, allowed) -> Iterable[frozenset[int]]:
    """All connected vertex subsets containing ``anchor`` inside ``allowed``.

    Frontier branching with a forbidden set yields each subset exactly
    once; in a tree no vertex can re-enter the frontier because that would
    close a cycle.
    """
    first = [w for w in adj[anchor] if w in allowed]

    def rec(current: frozenset[int], frontier: list[int], forbidden: frozenset[int]):
        if not frontier:
            yield current
            return
        w, rest = frontier[0], frontier[1:]
        yield from rec(current, rest, forbidden | {w})
        grown = rest + [
            x
            for x in adj[w]
            if x in allowed and x not in current and x not in forbidden and x != w and x not in rest
        ]
        yield from rec(current | {w}, [x for x in grown if x != anchor], forbidden)

    yield from rec(frozenset({anchor}), first, frozenset())


def _subset_term(adj: list[list[int]], subset: frozenset[int], root: int | None = None) -> tuple[int, int]:
    """(edge count, internal edge count) of the subtree induced by ``subset``."""
    deg = {v: sum(1 for w in adj[v] if w in subset) for v in subset}
    edge_count = len(subset) - 1
    leaf_count = 0
    for v in subset:
        for w in adj[v]:
            if w in subset and v < w:
                if (deg[v] == 1 and v != root) or (deg[w] == 1 and w != root):
                    leaf_count += 1
    return edge_count, edge_count - leaf_count


def unrooted_poly(t: Tree) -> BiPoly:
    """Subtree generating polynomial of an unrooted tree.

    Anchored enumeration: every subtree is visited from its lowest-labeled
    vertex, over the vertex pool above that label.
    """
    adj = adjacency(t)
    coeffs: dict[tuple[int, int], int] = {(0, 0): 1}
    for anchor in range(t.n):
        allowed = frozenset(range(anchor + 1, t.n))
        for subset in _connected_subsets(adj, anchor, allowed):
            if len(subset) < 2:
                continue
            key = _subset_term(adj, subset)
            coeffs[key] = coeffs.get(key, 0) + 1
    return BiPoly(coeffs)


def rooted_poly(t: Tree, root: int) -> BiPoly:
    """Generating polynomial of the subtrees containing ``root``.

    The bare root contributes 1; the root never counts as a leaf when
    classifying the edges of a subtree.
    """
    if not 0 <= root < t.n:
        raise ValueError(f"root {root} out of range")
    adj = adjacency(t)
    allowed = frozenset(range(t.n))
    coeffs: dict[tuple[int, int], int] = {}
    for subset in _connected_subsets(adj, root, allowed):
        if len(subset) == 1:
            key = (0, 0)
        else:
            key = _subset_term(adj, subset, root=root)
        coeffs[key] = coeffs.get(key, 0) + 1
    return BiPoly(coeffs)


class AlphaBeta(NamedTuple):
    alpha: int
    beta: int
    internal_edges: int


def alpha_beta(t: Tree) -> AlphaBeta:
    """Read (alpha, beta) off the second-highest t-row of the polynomial.

    With |E| edges and |I| internal edges, the t^{|E|-1} row equals
    alpha*y^{|I|-1} + beta*y^{|I|}: deleting a leaf edge either demotes
    the sibling edge at a degree-2 support to a leaf edge (alpha bucket)
    or leaves the internal count unchanged (beta bucket).  For n >= 4 the
    alpha bucket is exactly the graftable-edge count of the tree.
    """
    if t.n < 3:
        raise ValueError("alpha/beta extraction needs at least 3 vertices")
    poly = unrooted_poly(t)
    deg = degrees(t)
    adj = adjacency(t)
    n_edges = t.n - 1
    n_leaf = len(leaf_edges(t))
    internal = n_edges - n_leaf
    alpha = poly.coefficient(n_edges - 1, internal - 1) if internal >= 1 else 0
    beta = poly.coefficient(n_edges - 1, internal)
    demotions = 0
    for e in leaf_edges(t):
        if deg[e.support] == 2:
            sibling_end = next(w for w in adj[e.support] if w != e.leaf)
            if deg[sibling_end] >= 2:
                demotions += 1
    if alpha != demotions or alpha + beta != n_leaf:
        raise AssertionError("second-row coefficients disagree with leaf-edge structure")
    return AlphaBeta(alpha, beta, internal)


# t(1 - tz) expressed in the y representation: z = y - 1.
_RECURSION_FACTOR = BiPoly({(1, 0): 1, (2, 0): 1, (2, 1): -1})


def _off_tree(parent: Tree, edge) -> tuple[Tree, int]:
    """Drop the moved leaf and its old support; return (tree, new root label).

    The root is the reattachment vertex (far endpoint of the support's
    other edge), relabeled densely.
    """
    n1, n2 = edge.support, edge.leaf
    v = next(w for w in adjacency(parent)[n1] if w != n2)
    keep = sorted(set(range(parent.n)) - {n1, n2})
    relabel = {old: new for new, old in enumerate(keep)}
    edges = tuple(
        (relabel[a], relabel[b])
        for a, b in parent.edges
        if a not in (n1, n2) and b not in (n1, n2)
    )
    return Tree(len(keep), edges), relabel[v]


def verify_recursion(p: Poset, chain: list[CanonicalCode]) -> tuple[bool, BiPoly]:
    """Check the grafting recursion along a directed chain of poset nodes.

    Returns (holds exactly, residual polynomial); the residual is
    f(first) - f(last) - t(1-tz)*[m - sum of rooted off-tree polynomials]
    and must vanish.  Raises if consecutive entries are not arc-linked.
    """
    if len(chain) < 2:
        raise ValueError("chain needs at least two nodes")
    arcs = {(a.parent, a.child): a for a in p.arcs}
    g_sum = BiPoly.zero()
    m = len(chain) - 1
    for parent_code, child_code in zip(chain, chain[1:]):
        arc = arcs.get((parent_code, child_code))
        if arc is None:
            raise ValueError(
                f"no grafting arc {parent_code.hex()} -> {child_code.hex()}"
            )
        sub, root = _off_tree(p.node(parent_code).tree, arc.edge)
        g_sum = g_sum + rooted_poly(sub, root)
    residual = (
        unrooted_poly(p.node(chain[0]).tree)
        - unrooted_poly(p.node(chain[-1]).tree)
        - _RECURSION_FACTOR * (BiPoly.constant(m) - g_sum)
    )
    return residual.is_zero(), residual


@dataclass
class DistinctnessReport:
    """Pairwise polynomial-distinctness audit over one poset."""

    n_nodes: int
    pairs_checked: int
    # (code_a, code_b, matched conditions) for every pair with equal polynomials
    violations: list[tuple[CanonicalCode, CanonicalCode, list[str]]]
    # pairs meeting none of the three conditions (not required to differ)
    unconstrained_pairs: list[tuple[CanonicalCode, CanonicalCode]]

    @property
    def passed(self) -> bool:
        return not self.violations


def audit_distinctness(p: Poset) -> DistinctnessReport:
    """Assert polynomial inequality for node pairs that a directed path,
    a shared parent, or a level difference forces apart."""
    polys = {node.code: unrooted_poly(node.tree) for node in p.nodes}
    levels = {node.code: node.level for node in p.nodes}
    parents = {node.code: set(p.parents(node.code)) for node in p.nodes}
    codes = [node.code for node in p.nodes]
    violations = []
    unconstrained = []
    checked = 0
    for i, a in enumerate(codes):
        desc_a = p.descendants(a)
        for b in codes[i + 1 :]:
            conditions = []
            if b in desc_a or a in p.descendants(b):
                conditions.append("directed-path")
            if parents[a] & parents[b]:
                conditions.append("same-parent")
            if levels[a] != levels[b]:
                conditions.append("different-levels")
            if not conditions:
                unconstrained.append((a, b))
                continue
            checked += 1
            if polys[a] == polys[b]:
                violations.append((a, b, conditions))
    return DistinctnessReport(len(codes), checked, violations, unconstrained)
