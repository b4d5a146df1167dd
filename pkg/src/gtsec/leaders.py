"""Direct enumeration of poset leaders via anchored integer partitions.

A leader (no vertex with two leaf neighbors) decomposes into anchor
vertices carrying pendant branches, with anchors strung along a connecting
backbone.  Enumerating anchor counts, connecting-segment lengths, and
per-anchor branch partitions therefore generates every leader without
walking the grafting closure.

The generator deliberately over-generates and filters: the pruning rules
(at most one length-1 branch per anchor, end anchors of multi-anchor
strings carry at least two branches) cut the search, canonical codes
remove duplicates, and the structural leader predicate is the final word.
Within the supported range (orders 4..12) a path arrangement of anchors is
complete: a branching anchor layout needs a degree-3 anchor whose three
anchor neighbors each carry two branches, which takes 13 vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .trees import (
    CanonicalCode,
    Tree,
    canonical_code,
    canonical_form,
    enumerate_trees,
    is_poset_leader,
)

__all__ = [
    "BranchString",
    "leaders_structural",
    "leaders_partition",
    "leader_census",
    "census_to_csv",
]


@dataclass(frozen=True)
class BranchString:
    """Anchored branch-length description of a candidate leader.

    ``parts[i]`` is the branch-length partition hanging off anchor i;
    ``segments[j]`` is the edge length of the backbone piece between
    anchors j and j+1.  Anchor vertices are not counted in any part, so
    the total order is  #anchors + sum(parts) + sum(segment interior
    vertices).
    """

    parts: tuple[tuple[int, ...], ...]
    segments: tuple[int, ...]

    @property
    def anchors(self) -> int:
        return len(self.parts)

    @property
    def order(self) -> int:
        interior = sum(s - 1 for s in self.segments)
        return self.anchors + sum(map(sum, self.parts)) + interior

    def to_tree(self) -> Tree:
        edges = []
        nxt = self.anchors  # anchor vertices take labels 0..A-1
        for a, s in enumerate(self.segments):
            prev = a
            for _ in range(s - 1):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            edges.append((prev, a + 1))
        for a, partition in enumerate(self.parts):
            for length in partition:
                prev = a
                for _ in range(length):
                    edges.append((prev, nxt))
                    prev = nxt
                    nxt += 1
        return Tree(nxt, tuple(edges))


def leaders_structural(n: int) -> list[Tree]:
    """Brute-force route: filter the full class listing by the leader
    predicate.  Deterministic order (by canonical code)."""
    if not 4 <= n <= 12:
        raise ValueError(f"order must be in [4, 12], got {n}")
    return [t for t in enumerate_trees(n) if is_poset_leader(t)]


def _partitions_with_single_one(total: int, max_parts: int | None = None):
    """Partitions of ``total`` into positive parts, at most one part == 1,
    non-increasing order."""

    def rec(remaining, cap, ones_left, count):
        if remaining == 0:
            yield ()
            return
        if max_parts is not None and count >= max_parts:
            return
        for part in range(min(cap, remaining), 0, -1):
            if part == 1 and not ones_left:
                continue
            for rest in rec(remaining - part, part, ones_left and part > 1, count + 1):
                yield (part,) + rest

    yield from rec(total, total, True, 0)


def _candidate_strings(n: int):
    """All anchored branch strings of total order n passing the prunes."""
    max_anchors = 4  # 5 anchors already need 14 vertices
    for a in range(1, max_anchors + 1):
        budget = n - a  # vertices left for branches and segment interiors
        if budget < 2:
            continue
        if a == 1:
            for partition in _partitions_with_single_one(budget):
                if len(partition) >= 2:
                    yield BranchString((partition,), ())
            continue
        # split the budget between segment interiors and per-anchor branches
        for interiors in itertools.product(range(budget), repeat=a - 1):
            branch_budget = budget - sum(interiors)
            if branch_budget < 1:
                continue
            segments = tuple(i + 1 for i in interiors)
            # ordered compositions of the branch budget across anchors;
            # end anchors need >= 2 branches (else they are not hubs and the
            # string re-merges into a shorter one), middles need >= 1
            for loads in _compositions(branch_budget, a):
                if loads[0] < 3 or loads[-1] < 3:
                    # two branches with at most one 1 need at least 1+2
                    continue
                if any(load < 1 for load in loads):
                    continue
                part_choices = []
                for pos, load in enumerate(loads):
                    min_parts = 2 if pos in (0, a - 1) else 1
                    opts = [
                        p
                        for p in _partitions_with_single_one(load)
                        if len(p) >= min_parts
                    ]
                    part_choices.append(opts)
                for combo in itertools.product(*part_choices):
                    yield BranchString(tuple(combo), segments)


def _compositions(total: int, parts: int):
    """Ordered tuples of ``parts`` nonnegative ints summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def leaders_partition(n: int) -> list[Tree]:
    """Partition route: materialize anchored branch strings, deduplicate by
    canonical code, and keep what the leader predicate admits.

    Per-anchor partitions are unordered, but their assignment to anchor
    positions is ordered: permuting partitions along the backbone can
    produce non-isomorphic leaders, and the code-level deduplication keeps
    exactly one copy of each class.
    """
    if not 4 <= n <= 12:
        raise ValueError(f"order must be in [4, 12], got {n}")
    found: dict[CanonicalCode, Tree] = {}
    for string in _candidate_strings(n):
        if string.order != n:
            continue
        t = string.to_tree()
        code = canonical_code(t)
        if code in found:
            continue
        if is_poset_leader(t):
            found[code] = canonical_form(t)
    return [found[c] for c in sorted(found)]


@dataclass
class CensusRow:
    n: int
    leader_count: int
    codes: list[str]
    poset_sizes: list[int]
    agreement: bool


def leader_census(n_min: int, n_max: int) -> list[CensusRow]:
    """Per-order table: leader count, poset sizes, and whether the two
    enumeration routes agree."""
    from .posets import build_all_posets

    if not 4 <= n_min <= n_max <= 12:
        raise ValueError("census range must satisfy 4 <= n_min <= n_max <= 12")
    rows = []
    for n in range(n_min, n_max + 1):
        structural = leaders_structural(n)
        partition = leaders_partition(n)
        agree = [canonical_code(t) for t in structural] == [
            canonical_code(t) for t in partition
        ]
        posets, _ = build_all_posets(n)
        rows.append(
            CensusRow(
                n=n,
                leader_count=len(structural),
                codes=[canonical_code(t).hex() for t in structural],
                poset_sizes=[len(p.nodes) for p in posets],
                agreement=agree,
            )
        )
    return rows


def census_to_csv(rows: list[CensusRow]) -> str:
    lines = ["n,leader_count,codes,poset_sizes,agreement"]
    for row in rows:
        lines.append(
            f"{row.n},{row.leader_count},{';'.join(row.codes)},"
            f"{';'.join(map(str, row.poset_sizes))},{str(row.agreement).lower()}"
        )
    return "\n".join(lines) + "\n"
