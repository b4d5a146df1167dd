"""Leader enumeration: structural filter vs anchored-partition generator."""

import pytest

from gtsec.leaders import (
    BranchString,
    census_to_csv,
    leader_census,
    leaders_partition,
    leaders_structural,
)
from gtsec.trees import canonical_code, enumerate_trees, is_poset_leader, path, spider

from _oracles import distance_profile


class TestBranchString:
    def test_single_anchor_spider(self):
        s = BranchString(((3, 2, 1),), ())
        assert s.order == 7
        assert canonical_code(s.to_tree()) == canonical_code(spider(1, 2, 3))

    def test_path_strings_collapse(self):
        # (1+5), (2+4), (3+3) all describe the order-7 path
        for parts in ((1, 5), (2, 4), (3, 3)):
            s = BranchString((tuple(sorted(parts, reverse=True)),), ())
            assert canonical_code(s.to_tree()) == canonical_code(path(7))

    def test_two_anchor_order(self):
        s = BranchString(((2, 1), (2, 2)), (1,))
        assert s.order == 2 + 3 + 4
        assert is_poset_leader(s.to_tree())


class TestLeadersStructural:
    def test_counts_4_to_7(self):
        assert [len(leaders_structural(n)) for n in (4, 5, 6, 7)] == [1, 1, 2, 3]

    def test_n7_members(self):
        expected = {
            canonical_code(path(7)),
            canonical_code(spider(1, 2, 3)),
            canonical_code(spider(2, 2, 2)),
        }
        assert {canonical_code(t) for t in leaders_structural(7)} == expected

    def test_n4_n5_path_only(self):
        assert [canonical_code(t) for t in leaders_structural(4)] == [canonical_code(path(4))]
        assert [canonical_code(t) for t in leaders_structural(5)] == [canonical_code(path(5))]

    def test_n6(self):
        expected = {canonical_code(path(6)), canonical_code(spider(1, 2, 2))}
        assert {canonical_code(t) for t in leaders_structural(6)} == expected

    def test_bounds(self):
        with pytest.raises(ValueError):
            leaders_structural(3)
        with pytest.raises(ValueError):
            leaders_structural(13)


class TestLeadersPartition:
    @pytest.mark.parametrize("n", range(4, 13))
    def test_matches_structural(self, n):
        s = [canonical_code(t) for t in leaders_structural(n)]
        p = [canonical_code(t) for t in leaders_partition(n)]
        assert p == s

    def test_every_output_is_a_leader(self):
        for n in range(4, 11):
            for t in leaders_partition(n):
                assert is_poset_leader(t)
                assert t.n == n

    def test_no_vertex_with_two_leaf_neighbors(self):
        for t in leaders_partition(9):
            deg = [t.degree(v) for v in range(t.n)]
            for v in range(t.n):
                leaf_nbrs = sum(1 for w in t.neighbors(v) if deg[w] == 1)
                assert leaf_nbrs < 2

    def test_permutation_sensitivity_produces_distinct_leaders(self):
        # identical per-anchor partitions, permuted layout along the
        # backbone, non-isomorphic results: both must be enumerated
        a = BranchString(((2, 1), (1,), (2, 2)), (1, 2)).to_tree()
        b = BranchString(((2, 1), (1,), (2, 2)), (2, 1)).to_tree()
        assert a.n == b.n == 12
        assert is_poset_leader(a) and is_poset_leader(b)
        # same degree sequence, different distance profile: certified
        # non-isomorphic without a 12! permutation search
        assert sorted(a.degree(v) for v in range(12)) == sorted(
            b.degree(v) for v in range(12)
        )
        assert distance_profile(a) != distance_profile(b)
        codes = {canonical_code(t) for t in leaders_partition(12)}
        assert canonical_code(a) in codes and canonical_code(b) in codes

    def test_bounds(self):
        with pytest.raises(ValueError):
            leaders_partition(13)


class TestCensus:
    def test_rows_and_agreement(self):
        rows = leader_census(4, 7)
        assert [r.leader_count for r in rows] == [1, 1, 2, 3]
        assert all(r.agreement for r in rows)
        assert rows[-1].poset_sizes == [3, 4, 4] or sorted(rows[-1].poset_sizes) == [3, 4, 4]

    def test_n7_poset_sizes_sum_to_class_count(self):
        rows = leader_census(7, 7)
        assert sum(rows[0].poset_sizes) == len(enumerate_trees(7)) == 11

    def test_csv_shape(self):
        text = census_to_csv(leader_census(4, 6))
        lines = text.strip().splitlines()
        assert lines[0] == "n,leader_count,codes,poset_sizes,agreement"
        assert len(lines) == 4
        assert lines[1].startswith("4,1,")
        assert lines[1].endswith(",true")

    def test_bounds(self):
        with pytest.raises(ValueError):
            leader_census(3, 7)
        with pytest.raises(ValueError):
            leader_census(6, 4)
