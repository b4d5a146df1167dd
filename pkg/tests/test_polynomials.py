"""Subtree polynomials: frozen diamond-poset values, the rooted-form
convention, the grafting recursion, alpha/beta, and distinctness audits.

The four order-7 diamond polynomials are frozen below and additionally
re-derived in-test by a literal edge-subset scan, so the constants cannot
drift from the definition.  (One second-row coefficient of the sink
polynomial, 9*t^4*y, is pinned by that scan, by the subtree count through
f(1,1), and by the recursion residual, which all force the same value.)
"""

import pytest

from gtsec.polynomials import (
    AlphaBeta,
    BiPoly,
    alpha_beta,
    audit_distinctness,
    rooted_poly,
    unrooted_poly,
    verify_recursion,
)
from gtsec.posets import build_all_posets, build_poset
from gtsec.trees import (
    Tree,
    canonical_code,
    enumerate_trees,
    graftable_edges,
    leaf_edges,
    path,
    spider,
    star,
)

from _oracles import subtree_terms_bruteforce


# the order-7 diamond poset: leader spider(1,2,3), two middles, sink
DIAMOND_LEADER = spider(1, 2, 3)
F_LEADER = BiPoly({(6, 3): 1, (5, 3): 1, (5, 2): 2, (4, 2): 3, (4, 1): 2,
                   (3, 1): 5, (3, 0): 1, (2, 0): 6, (1, 0): 6, (0, 0): 1})
F_MID_LEFT = BiPoly({(6, 2): 1, (5, 2): 3, (5, 1): 1, (4, 2): 3, (4, 1): 3,
                     (4, 0): 1, (3, 1): 4, (3, 0): 4, (2, 0): 8, (1, 0): 6, (0, 0): 1})
F_MID_RIGHT = BiPoly({(6, 2): 1, (5, 2): 3, (5, 1): 1, (4, 2): 2, (4, 1): 5,
                      (3, 1): 6, (3, 0): 2, (2, 0): 7, (1, 0): 6, (0, 0): 1})
F_SINK = BiPoly({(6, 1): 1, (5, 1): 5, (4, 1): 9, (4, 0): 1, (3, 1): 6,
                 (3, 0): 5, (2, 0): 9, (1, 0): 6, (0, 0): 1})


class TestBiPoly:
    def test_arithmetic(self):
        a = BiPoly({(1, 0): 2, (0, 0): 1})
        b = BiPoly({(1, 0): -2, (2, 1): 3})
        assert (a + b) == BiPoly({(0, 0): 1, (2, 1): 3})
        assert (a - a).is_zero()
        assert a * BiPoly.one() == a
        assert (a * 0).is_zero()

    def test_mul(self):
        # (t + 1)(t - 1) = t^2 - 1
        a = BiPoly({(1, 0): 1, (0, 0): 1})
        b = BiPoly({(1, 0): 1, (0, 0): -1})
        assert a * b == BiPoly({(2, 0): 1, (0, 0): -1})

    def test_z_form_substitution(self):
        # t*y^2 -> t*(z+1)^2 = t*z^2 + 2*t*z + t
        p = BiPoly({(1, 2): 1})
        assert p.z_form() == BiPoly({(1, 2): 1, (1, 1): 2, (1, 0): 1})

    def test_text_rendering(self):
        assert str(BiPoly({(3, 1): 1, (2, 0): 2, (1, 0): 3, (0, 0): 1})) == (
            "t^3*y + 2*t^2 + 3*t + 1"
        )
        assert str(BiPoly()) == "0"
        assert BiPoly({(1, 1): -1, (0, 0): 1}).to_text("z") == "-t*z + 1"

    def test_json_roundtrip(self):
        p = unrooted_poly(spider(1, 2, 3))
        assert BiPoly.from_json(p.to_json()) == p


class TestUnrootedPoly:
    def test_diamond_poset_frozen_values(self):
        p = build_poset(DIAMOND_LEADER)
        by_level = {}
        for nd in p.nodes:
            by_level.setdefault(nd.level, []).append(nd.tree)
        assert unrooted_poly(by_level[0][0]) == F_LEADER
        assert unrooted_poly(by_level[2][0]) == F_SINK
        mids = {unrooted_poly(t) for t in by_level[1]}
        assert mids == {F_MID_LEFT, F_MID_RIGHT}

    def test_diamond_values_against_subset_scan(self):
        p = build_poset(DIAMOND_LEADER)
        for nd in p.nodes:
            scan = subtree_terms_bruteforce(nd.tree)
            assert unrooted_poly(nd.tree) == BiPoly(scan)

    def test_p4_by_hand(self):
        # 1 empty + 3 single edges + 2 two-edge paths + the full path
        assert unrooted_poly(path(4)) == BiPoly(
            {(3, 1): 1, (2, 0): 2, (1, 0): 3, (0, 0): 1}
        )

    def test_matches_subset_scan_up_to_8(self):
        for n in range(2, 9):
            for t in enumerate_trees(n):
                assert unrooted_poly(t) == BiPoly(subtree_terms_bruteforce(t))

    def test_sum_rule_and_top_term(self):
        for n in range(3, 9):
            for t in enumerate_trees(n):
                poly = unrooted_poly(t)
                assert poly.evaluate(0, 1) == 1  # empty subtree only
                internal = (t.n - 1) - len(leaf_edges(t))
                assert poly.coefficient(t.n - 1, internal) == 1  # the whole tree
                # t row: one term per edge
                assert poly.coefficient(1, 0) == t.n - 1


class TestRootedPoly:
    def test_single_edge_at_endpoint(self):
        assert rooted_poly(path(2), 0) == BiPoly({(1, 0): 1, (0, 0): 1})

    def test_two_edge_path_at_end(self):
        assert rooted_poly(path(3), 0) == BiPoly({(2, 1): 1, (1, 0): 1, (0, 0): 1})

    def test_isolated_root_term(self):
        # every rooted polynomial contains the bare-root constant 1
        for n in range(2, 7):
            for t in enumerate_trees(n):
                for v in range(t.n):
                    assert rooted_poly(t, v).coefficient(0, 0) == 1

    def test_root_invariance_under_relabeling(self):
        t = spider(1, 2, 3)
        # rooting at the center must match rooting at the center of any relabeling
        import itertools

        base = rooted_poly(t, 0)
        for perm in list(itertools.permutations(range(7)))[:50]:
            relab = Tree(7, tuple((perm[u], perm[v]) for u, v in t.edges))
            assert rooted_poly(relab, perm[0]) == base

    def test_bad_root(self):
        with pytest.raises(ValueError):
            rooted_poly(path(3), 5)


class TestRecursion:
    def test_p4_to_star_instance(self):
        p = build_poset(path(4))
        ok, residual = verify_recursion(p, [p.leader, p.lf])
        assert ok and residual.is_zero()

    def test_p5_to_chair_instance(self):
        p = build_poset(path(5))
        chain = p.maximal_chains()[0]
        ok, _ = verify_recursion(p, chain[:2])
        assert ok

    def test_all_arcs_and_chains_up_to_8(self):
        for n in range(4, 9):
            posets, _ = build_all_posets(n)
            for p in posets:
                for a in p.arcs:
                    ok, residual = verify_recursion(p, [a.parent, a.child])
                    assert ok, f"nonzero residual {residual} at order {n}"
                for chain in p.maximal_chains():
                    ok, _ = verify_recursion(p, chain)
                    assert ok

    def test_rejects_non_arc_chain(self):
        p = build_poset(spider(1, 2, 3))
        mids = [nd.code for nd in p.nodes if nd.level == 1]
        with pytest.raises(ValueError):
            verify_recursion(p, [mids[0], mids[1]])

    def test_alternative_root_convention_fails(self):
        # counting the root as a leaf breaks the order-5 instance: the
        # correct off-tree polynomial has a t^2*y term, not t^2
        wrong_g = BiPoly({(2, 0): 1, (1, 0): 1, (0, 0): 1})
        factor = BiPoly({(1, 0): 1, (2, 0): 1, (2, 1): -1})
        p = build_poset(path(5))
        chain = p.maximal_chains()[0]
        f_parent = unrooted_poly(p.node(chain[0]).tree)
        f_child = unrooted_poly(p.node(chain[1]).tree)
        residual = f_parent - f_child - factor * (BiPoly.one() - wrong_g)
        assert not residual.is_zero()


class TestAlphaBeta:
    def test_diamond_leader_and_sink(self):
        p = build_poset(DIAMOND_LEADER)
        leader = p.node(p.leader).tree
        sink = p.node(p.lf).tree
        assert alpha_beta(leader).alpha == 2
        assert alpha_beta(sink).alpha == 0

    def test_p4(self):
        assert alpha_beta(path(4)) == AlphaBeta(alpha=2, beta=0, internal_edges=1)

    def test_p3_boundary(self):
        # both leaf edges sit on the degree-2 center, but deleting one
        # cannot demote the sibling (already a leaf edge), so alpha is 0
        assert alpha_beta(path(3)) == AlphaBeta(alpha=0, beta=2, internal_edges=0)

    def test_alpha_equals_graftable_count_from_4(self):
        for n in range(4, 9):
            for t in enumerate_trees(n):
                ab = alpha_beta(t)
                assert ab.alpha == len(graftable_edges(t))
                assert ab.alpha + ab.beta == len(leaf_edges(t))

    def test_zero_alpha_means_fixed_point(self):
        for n in range(4, 9):
            for t in enumerate_trees(n):
                assert (alpha_beta(t).alpha == 0) == (len(graftable_edges(t)) == 0)


class TestDistinctness:
    def test_diamond_all_pairs_distinct(self):
        rep = audit_distinctness(build_poset(DIAMOND_LEADER))
        assert rep.passed
        assert rep.pairs_checked == 6
        assert rep.unconstrained_pairs == []

    def test_chain_posets(self):
        for leader in (path(7), spider(2, 2, 2)):
            rep = audit_distinctness(build_poset(leader))
            assert rep.passed

    def test_sweep_up_to_8(self):
        for n in range(4, 9):
            posets, _ = build_all_posets(n)
            for p in posets:
                assert audit_distinctness(p).passed


class TestAlphaDistanceRelation:
    def test_alpha_vs_lf_distance_in_order7_posets(self):
        # in every order-7 poset the leader's alpha equals its grafting
        # distance to the sink; the order-4 path is the known exception
        for leader in (path(7), spider(1, 2, 3), spider(2, 2, 2)):
            p = build_poset(leader)
            depth = max(nd.level for nd in p.nodes)
            assert alpha_beta(leader).alpha == depth

    def test_p4_anomaly_flagged(self):
        p = build_poset(path(4))
        depth = max(nd.level for nd in p.nodes)
        assert alpha_beta(path(4)).alpha == 2
        assert depth == 1  # alpha overestimates the distance here
