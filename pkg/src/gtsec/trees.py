"""Unrooted tree topologies and the structural queries behind grafting orders.

Vertices are dense 0-based integers.  Identity up to isomorphism is always
decided through :func:`canonical_code` (a center-rooted AHU-style encoding);
vertex labels themselves carry no meaning.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_ORDER = 16

__all__ = [
    "MAX_ORDER",
    "Tree",
    "CanonicalCode",
    "EdgeRef",
    "path",
    "star",
    "spider",
    "from_prufer",
    "adjacency",
    "degrees",
    "leaves",
    "centers",
    "canonical_code",
    "canonical_form",
    "tree_from_code",
    "enumerate_trees",
    "edge_refs",
    "leaf_edges",
    "graftable_edges",
    "is_poset_leader",
    "is_lf",
    "parse_tree",
    "format_tree",
]


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Tree:
    """Unrooted tree on ``n`` vertices labeled ``0..n-1``.

    Edges are normalized to sorted ``(u, v)`` pairs and stored in sorted
    order, so two Tree values compare equal iff they are the same labeled
    tree.  Construction validates connectivity, the edge count, and the
    absence of loops and duplicates.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("tree order must be positive")
        norm = tuple(sorted(_norm_edge(u, v) for u, v in self.edges))
        object.__setattr__(self, "edges", norm)
        if len(norm) != self.n - 1:
            raise ValueError(
                f"a tree on {self.n} vertices needs {self.n - 1} edges, got {len(norm)}"
            )
        seen = set()
        for u, v in norm:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for order {self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        # n-1 edges + connected => acyclic, so connectivity is the only check left
        adj = [[] for _ in range(self.n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        reached = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        if len(reached) != self.n:
            raise ValueError("edge set is not connected")

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return tuple(sorted(out))


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism-invariant code of a tree, as a balanced-paren string.

    Two trees carry the same code iff they are isomorphic.  Codes order
    lexicographically on the paren string and serialize as lowercase hex
    of the ASCII bytes.
    """

    parens: str

    def hex(self) -> str:
        return self.parens.encode("ascii").hex()

    @classmethod
    def from_hex(cls, text: str) -> "CanonicalCode":
        parens = bytes.fromhex(text).decode("ascii")
        depth = 0
        for ch in parens:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            else:
                raise ValueError(f"invalid code character {ch!r}")
            if depth < 0:
                raise ValueError("unbalanced code")
        if depth != 0:
            raise ValueError("unbalanced code")
        return cls(parens)

    def __str__(self) -> str:
        return self.hex()


@dataclass(frozen=True)
class EdgeRef:
    """An edge together with its leaf-edge role tags.

    ``leaf``/``support`` are populated only for leaf edges: ``leaf`` is the
    degree-1 endpoint and ``support`` the other one.  For the order-2 tree,
    where both endpoints are leaves, the smaller index is the support.
    """

    u: int
    v: int
    is_leaf_edge: bool
    leaf: int | None = None
    support: int | None = None

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def path(n: int) -> Tree:
    """Path on ``n`` vertices, labeled along the path."""
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star(leaf_count: int) -> Tree:
    """Star with ``leaf_count`` leaves around center 0 (order leaf_count+1)."""
    return Tree(leaf_count + 1, tuple((0, i) for i in range(1, leaf_count + 1)))


def spider(*arm_lengths: int) -> Tree:
    """Spider: center 0 with pendant paths of the given lengths."""
    if len(arm_lengths) < 2:
        raise ValueError("a spider needs at least two arms")
    edges = []
    nxt = 1
    for length in arm_lengths:
        if length < 1:
            raise ValueError("arm lengths must be positive")
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, tuple(edges))


def from_prufer(seq: tuple[int, ...], n: int) -> Tree:
    """Decode a Pruefer sequence of length ``n-2`` into a labeled tree."""
    if len(seq) != n - 2:
        raise ValueError("sequence length must be order minus two")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq

    leaf_heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaf_heap)
    for x in seq:
        leaf = heapq.heappop(leaf_heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaf_heap, x)
    u = heapq.heappop(leaf_heap)
    v = heapq.heappop(leaf_heap)
    edges.append((u, v))
    return Tree(n, tuple(edges))


# ---------------------------------------------------------------------------
# Basic queries
# ---------------------------------------------------------------------------


def adjacency(t: Tree) -> list[list[int]]:
    adj = [[] for _ in range(t.n)]
    for u, v in t.edges:
        adj[u].append(v)
        adj[v].append(u)
    for row in adj:
        row.sort()
    return adj


def degrees(t: Tree) -> list[int]:
    deg = [0] * t.n
    for u, v in t.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def leaves(t: Tree) -> list[int]:
    deg = degrees(t)
    return [v for v in range(t.n) if deg[v] == 1]


def centers(t: Tree) -> list[int]:
    """The one or two middle vertices, found by iterative leaf pruning."""
    if t.n <= 2:
        return list(range(t.n))
    adj = {v: set(nbrs) for v, nbrs in enumerate(adjacency(t))}
    layer = [v for v in adj if len(adj[v]) == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            (w,) = adj[v]
            adj[w].discard(v)
            del adj[v]
            if len(adj[w]) == 1:
                nxt.append(w)
        layer = nxt
    return sorted(adj)


def _rooted_encoding(adj: list[list[int]], root: int, parent: int = -1) -> str:
    children = sorted(
        _rooted_encoding(adj, c, root) for c in adj[root] if c != parent
    )
    return "(" + "".join(children) + ")"


@lru_cache(maxsize=1 << 16)
def canonical_code(t: Tree) -> CanonicalCode:
    """Center-rooted AHU encoding; bicentral trees take the smaller of the
    two rooted encodings."""
    adj = adjacency(t)
    best = min(_rooted_encoding(adj, c) for c in centers(t))
    return CanonicalCode(best)


def tree_from_code(code: CanonicalCode) -> Tree:
    """Rebuild a representative tree from its code (labels in preorder)."""
    edges = []
    stack: list[int] = []
    counter = 0
    for ch in code.parens:
        if ch == "(":
            node = counter
            counter += 1
            if stack:
                edges.append((stack[-1], node))
            stack.append(node)
        elif ch == ")":
            if not stack:
                raise ValueError("unbalanced code")
            stack.pop()
        else:
            raise ValueError(f"invalid code character {ch!r}")
    if stack or counter == 0:
        raise ValueError("unbalanced or empty code")
    return Tree(counter, tuple(edges))


def canonical_form(t: Tree) -> Tree:
    """The canonically labeled representative of t's isomorphism class."""
    return tree_from_code(canonical_code(t))


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """One canonically labeled representative per isomorphism class of
    order-``n`` trees, sorted by canonical code.

    Classes are grown by attaching a leaf to every vertex of every class of
    order n-1 and deduplicating by code; every unlabeled tree arises this
    way because removing any leaf of an order-k tree leaves an order-(k-1)
    tree.
    """
    if not 2 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in [2, {MAX_ORDER}], got {n}")
    classes = {canonical_code(Tree(2, ((0, 1),))): Tree(2, ((0, 1),))}
    for k in range(3, n + 1):
        grown: dict[CanonicalCode, Tree] = {}
        for t in classes.values():
            for v in range(t.n):
                candidate = Tree(k, t.edges + ((v, k - 1),))
                code = canonical_code(candidate)
                if code not in grown:
                    grown[code] = tree_from_code(code)
        classes = grown
    return tuple(classes[code] for code in sorted(classes))


# ---------------------------------------------------------------------------
# Leaf-edge structure
# ---------------------------------------------------------------------------


def edge_refs(t: Tree) -> list[EdgeRef]:
    deg = degrees(t)
    refs = []
    for u, v in t.edges:
        if deg[u] == 1 and deg[v] == 1:
            refs.append(EdgeRef(u, v, True, leaf=v, support=u))
        elif deg[v] == 1:
            refs.append(EdgeRef(u, v, True, leaf=v, support=u))
        elif deg[u] == 1:
            refs.append(EdgeRef(u, v, True, leaf=u, support=v))
        else:
            refs.append(EdgeRef(u, v, False))
    return refs


def leaf_edges(t: Tree) -> list[EdgeRef]:
    return [e for e in edge_refs(t) if e.is_leaf_edge]


def graftable_edges(t: Tree) -> list[EdgeRef]:
    """Leaf edges whose support vertex has degree exactly two.

    These are the edges the grafting move may cut: the leaf detaches from
    its degree-2 support and reattaches at the far end of the support's
    other edge.
    """
    if t.n < 3:
        return []
    deg = degrees(t)
    return [e for e in leaf_edges(t) if deg[e.support] == 2]


def is_poset_leader(t: Tree) -> bool:
    """True iff no vertex has two or more leaf neighbors.

    Equivalently: no tree grafts into ``t``.  Undoing a graft requires a
    vertex with two leaf neighbors (the moved leaf and the abandoned
    support), so exactly these trees have no grafting predecessor.
    """
    deg = degrees(t)
    count = [0] * t.n
    for u, v in t.edges:
        if deg[v] == 1:
            count[u] += 1
        if deg[u] == 1:
            count[v] += 1
    return all(c < 2 for c in count)


def is_lf(t: Tree) -> bool:
    """True iff the tree is a grafting fixed point (no graftable edges)."""
    return len(graftable_edges(t)) == 0


# ---------------------------------------------------------------------------
# Text format: first line n, then n-1 lines "u v"
# ---------------------------------------------------------------------------


def parse_tree(text: str) -> Tree:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty tree description")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' per edge line, got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Tree(n, tuple(edges))


def format_tree(t: Tree) -> str:
    lines = [str(t.n)]
    lines.extend(f"{u} {v}" for u, v in t.edges)
    return "\n".join(lines) + "\n"
