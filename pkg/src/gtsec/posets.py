"""Grafting and the partial orders it induces on tree topologies.

Each poset is the closure of a leader tree under the grafting move,
stored as a directed super-graph over isomorphism classes: one vertex per
canonical code, one arc per single grafting step.  An arc parent -> child
means the parent is weakly more favorable (its maximin security value
dominates for every weight assignment).
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .trees import (
    CanonicalCode,
    EdgeRef,
    Tree,
    adjacency,
    canonical_code,
    canonical_form,
    degrees,
    enumerate_trees,
    graftable_edges,
    is_lf,
    is_poset_leader,
    tree_from_code,
)

__all__ = [
    "Comparability",
    "PosetNode",
    "GraftArc",
    "Poset",
    "CoverageReport",
    "graft",
    "generalized_graft",
    "build_poset",
    "build_all_posets",
    "is_comparable",
    "export_poset",
    "import_poset",
]


class Comparability(enum.Enum):
    GE = "x>=y"
    LE = "y>=x"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class PosetNode:
    code: CanonicalCode
    tree: Tree
    level: int


@dataclass(frozen=True)
class GraftArc:
    parent: CanonicalCode
    child: CanonicalCode
    # one representative cut edge, in the parent representative's labeling
    edge: EdgeRef
    multiplicity: int


@dataclass
class Poset:
    n: int
    nodes: tuple[PosetNode, ...]
    arcs: tuple[GraftArc, ...]
    leader: CanonicalCode
    lf: CanonicalCode

    def __post_init__(self):
        self._by_code = {node.code: node for node in self.nodes}

    def node(self, code: CanonicalCode) -> PosetNode:
        try:
            return self._by_code[code]
        except KeyError:
            raise KeyError(f"code {code.hex()} not in poset") from None

    def __contains__(self, code: CanonicalCode) -> bool:
        return code in self._by_code

    def codes(self) -> list[CanonicalCode]:
        return [node.code for node in self.nodes]

    def children(self, code: CanonicalCode) -> list[CanonicalCode]:
        return [a.child for a in self.arcs if a.parent == code]

    def parents(self, code: CanonicalCode) -> list[CanonicalCode]:
        return [a.parent for a in self.arcs if a.child == code]

    def descendants(self, code: CanonicalCode) -> set[CanonicalCode]:
        seen: set[CanonicalCode] = set()
        stack = [code]
        while stack:
            for child in self.children(stack.pop()):
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
        return seen

    def maximal_chains(self) -> list[list[CanonicalCode]]:
        """All directed paths from the leader down to the sink."""
        chains = []

        def walk(code, trail):
            kids = self.children(code)
            if not kids:
                chains.append(trail)
                return
            for child in sorted(kids):
                walk(child, trail + [child])

        walk(self.leader, [self.leader])
        return chains


def graft(t: Tree, e: EdgeRef) -> Tree:
    """Apply one grafting move and return the canonical representative.

    The leaf edge (support, leaf) with a degree-2 support is cut and the
    leaf reattaches at the far endpoint of the support's remaining edge.
    """
    deg = degrees(t)
    if not (e.is_leaf_edge and e.support is not None and deg[e.support] == 2):
        raise ValueError(f"edge {e.endpoints} is not graftable")
    n1, n2 = e.support, e.leaf
    v = next(w for w in adjacency(t)[n1] if w != n2)
    edges = tuple(edge for edge in t.edges if set(edge) != {n1, n2}) + ((v, n2),)
    return canonical_form(Tree(t.n, edges))


def generalized_graft(t: Tree, e: EdgeRef, target: int) -> Tree:
    """Harness-only wider move: detach a leaf from its support (any degree)
    and reattach it at a chosen neighbor of the support.

    Poset construction never uses this; it exists so the confluence
    experiments can probe order-insensitivity of broader edge moves.
    Reduces to :func:`graft` when the support has degree two and ``target``
    is its other neighbor.
    """
    if not e.is_leaf_edge:
        raise ValueError(f"edge {e.endpoints} is not a leaf edge")
    n1, n2 = e.support, e.leaf
    if target == n2:
        raise ValueError("cannot reattach a leaf at itself")
    if target not in adjacency(t)[n1]:
        raise ValueError(f"target {target} is not a neighbor of support {n1}")
    edges = tuple(edge for edge in t.edges if set(edge) != {n1, n2}) + ((target, n2),)
    return canonical_form(Tree(t.n, edges))


def build_poset(leader: Tree) -> Poset:
    """Breadth-first grafting closure of a leader, deduplicated by code.

    Every grafting step turns the abandoned support into a fresh leaf, so
    all directed paths between two classes have equal length and the BFS
    depth is well-defined; the closure has a unique sink, which must be a
    grafting fixed point.
    """
    if not is_poset_leader(leader):
        raise ValueError("tree is not a poset leader (some vertex has two leaf neighbors)")
    root = canonical_form(leader)
    root_code = canonical_code(root)
    levels = {root_code: 0}
    trees = {root_code: root}
    arc_mult: dict[tuple[CanonicalCode, CanonicalCode], int] = {}
    arc_edge: dict[tuple[CanonicalCode, CanonicalCode], EdgeRef] = {}
    queue = [root_code]
    while queue:
        code = queue.pop(0)
        t = trees[code]
        level = levels[code]
        for e in graftable_edges(t):
            child = graft(t, e)
            child_code = canonical_code(child)
            if child_code not in levels:
                levels[child_code] = level + 1
                trees[child_code] = child
                queue.append(child_code)
            elif levels[child_code] != level + 1:
                raise AssertionError("grafting distance is not path-independent")
            key = (code, child_code)
            arc_mult[key] = arc_mult.get(key, 0) + 1
            arc_edge.setdefault(key, e)

    sinks = [c for c in levels if not any(p == c for p, _ in arc_mult)]
    if len(sinks) != 1:
        raise AssertionError(f"expected a unique sink, found {len(sinks)}")
    lf_code = sinks[0]
    if not is_lf(trees[lf_code]):
        raise AssertionError("poset sink is not a grafting fixed point")

    nodes = tuple(
        PosetNode(code, trees[code], levels[code])
        for code in sorted(levels, key=lambda c: (levels[c], c))
    )
    arcs = tuple(
        GraftArc(p, c, arc_edge[(p, c)], m)
        for (p, c), m in sorted(arc_mult.items())
    )
    return Poset(leader.n, nodes, arcs, root_code, lf_code)


@dataclass
class CoverageReport:
    """Which posets contain each order-n class, plus overlap statistics."""

    n: int
    sizes: list[int]
    membership: dict[CanonicalCode, list[int]]

    @property
    def all_covered(self) -> bool:
        return all(self.membership.values())

    @property
    def disjoint(self) -> bool:
        return all(len(v) <= 1 for v in self.membership.values())

    @property
    def overlaps(self) -> dict[CanonicalCode, list[int]]:
        return {c: v for c, v in self.membership.items() if len(v) > 1}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sizes": self.sizes,
            "all_covered": self.all_covered,
            "disjoint": self.disjoint,
            "overlaps": {c.hex(): v for c, v in self.overlaps.items()},
        }


def build_all_posets(n: int) -> tuple[list[Poset], CoverageReport]:
    """One poset per leader of order n, with a coverage/overlap report."""
    if not 4 <= n <= 12:
        raise ValueError(f"order must be in [4, 12], got {n}")
    leaders = [t for t in enumerate_trees(n) if is_poset_leader(t)]
    posets = [build_poset(t) for t in leaders]
    membership: dict[CanonicalCode, list[int]] = {
        canonical_code(t): [] for t in enumerate_trees(n)
    }
    for idx, p in enumerate(posets):
        for code in p.codes():
            membership[code].append(idx)
    report = CoverageReport(n, [len(p.nodes) for p in posets], membership)
    return posets, report


def is_comparable(p: Poset, x: CanonicalCode, y: CanonicalCode) -> Comparability:
    """Directed-reachability comparison; x == y counts as x >= y."""
    p.node(x)
    p.node(y)
    if x == y:
        return Comparability.GE
    if y in p.descendants(x):
        return Comparability.GE
    if x in p.descendants(y):
        return Comparability.LE
    return Comparability.INCOMPARABLE


# ---------------------------------------------------------------------------
# Export / import
# ---------------------------------------------------------------------------


def _node_alpha(node: PosetNode) -> int:
    # graftable-edge count; equals the polynomial second-term alpha for n >= 4
    return len(graftable_edges(node.tree))


def export_poset(p: Poset, fmt: str = "json") -> str:
    if fmt == "json":
        payload = {
            "n": p.n,
            "leader": p.leader.hex(),
            "lf": p.lf.hex(),
            "nodes": [
                {"code": node.code.hex(), "level": node.level, "alpha": _node_alpha(node)}
                for node in p.nodes
            ],
            "arcs": [
                {"from": a.parent.hex(), "to": a.child.hex(), "multiplicity": a.multiplicity}
                for a in p.arcs
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "dot":
        lines = ["digraph poset {", "  rankdir=TB;"]
        for node in p.nodes:
            label = f"code={node.code.hex()}\\nalpha={_node_alpha(node)}\\nlevel={node.level}"
            lines.append(f'  "{node.code.hex()}" [label="{label}"];')
        for a in p.arcs:
            attr = f' [label="x{a.multiplicity}"]' if a.multiplicity > 1 else ""
            lines.append(f'  "{a.parent.hex()}" -> "{a.child.hex()}"{attr};')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def import_poset(text: str) -> Poset:
    """Rebuild a poset from its JSON export.

    The leader is decoded from its canonical code and its closure rebuilt,
    then checked node-for-node and arc-for-arc against the payload, so an
    imported poset is structurally identical to the exported one.
    """
    payload = json.loads(text)
    leader = tree_from_code(CanonicalCode.from_hex(payload["leader"]))
    p = build_poset(leader)
    got_nodes = {(node.code.hex(), node.level, _node_alpha(node)) for node in p.nodes}
    want_nodes = {(d["code"], d["level"], d["alpha"]) for d in payload["nodes"]}
    got_arcs = {(a.parent.hex(), a.child.hex(), a.multiplicity) for a in p.arcs}
    want_arcs = {(d["from"], d["to"], d["multiplicity"]) for d in payload["arcs"]}
    if (
        p.n != payload["n"]
        or p.lf.hex() != payload["lf"]
        or got_nodes != want_nodes
        or got_arcs != want_arcs
    ):
        raise ValueError("poset payload does not match its grafting closure")
    return p
