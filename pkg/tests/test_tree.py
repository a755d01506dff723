import random

import pytest

from interdict import (
    CycleDetected,
    DisconnectedInput,
    DuplicateChild,
    GeneratorConfig,
    LeafInSet,
    NegativeWeight,
    TrivialTree,
    UpgradeBelowBase,
    all_upgraded_min_distance,
    apply_upgrades,
    build_tree,
    evaluate_min_distance,
    random_tree,
)
from conftest import EX1_RECORDS


def naive_min_distance(tree, upgraded):
    """Independent recomputation: walk every leaf's parents explicitly."""
    s = set(upgraded)
    best = None
    for leaf in tree.leaves:
        total = 0
        v = leaf
        while v != tree.root:
            total += tree.u[v] if tree.parent[v] in s else tree.w[v]
            v = tree.parent[v]
        best = total if best is None else min(best, total)
    return best


class TestBuildTree:
    def test_ex1_shape(self, ex1):
        assert ex1.node_count == 10
        assert sorted(ex1.leaves) == [3, 4, 6, 8, 10]
        assert sorted(ex1.non_leaves) == [1, 2, 5, 7, 9]
        assert ex1.children[1] == (2, 5, 7)
        assert ex1.degree(1) == 3 and ex1.degree(2) == 3 and ex1.degree(5) == 2

    def test_single_edge(self):
        t = build_tree([(2, 1, 5, 7)], root=1)
        assert t.node_count == 2
        assert t.leaves == {2}

    def test_upgrade_below_base(self):
        with pytest.raises(UpgradeBelowBase):
            build_tree([(2, 1, 3, 2)], root=1)

    def test_trivial(self):
        with pytest.raises(TrivialTree):
            build_tree([], root=1)

    def test_duplicate_child(self):
        with pytest.raises(DuplicateChild):
            build_tree([(2, 1, 1, 1), (2, 3, 1, 1)], root=1)

    def test_negative_weight(self):
        with pytest.raises(NegativeWeight):
            build_tree([(2, 1, -1, 2)], root=1)

    def test_cycle(self):
        with pytest.raises(CycleDetected):
            build_tree([(2, 3, 1, 1), (3, 2, 1, 1), (4, 1, 1, 1)], root=1)

    def test_root_with_parent(self):
        with pytest.raises(CycleDetected):
            build_tree([(1, 2, 1, 1), (2, 1, 1, 1)], root=1)

    def test_disconnected(self):
        with pytest.raises(DisconnectedInput):
            build_tree([(2, 1, 1, 1), (3, 9, 1, 1)], root=1)

    def test_children_sorted(self):
        t = build_tree([(5, 1, 1, 1), (3, 1, 1, 1), (4, 1, 1, 1)], root=1)
        assert t.children[1] == (3, 4, 5)


class TestEvaluate:
    def test_baseline(self, ex1):
        assert evaluate_min_distance(ex1, ()) == 7

    def test_root_upgraded(self, ex1):
        assert evaluate_min_distance(ex1, {1}) == 13

    def test_two_upgraded(self, ex1):
        assert evaluate_min_distance(ex1, {1, 7}) == 14

    def test_leaf_rejected(self, ex1):
        with pytest.raises(LeafInSet):
            evaluate_min_distance(ex1, {3})

    def test_unknown_node(self, ex1):
        with pytest.raises(ValueError):
            evaluate_min_distance(ex1, {42})

    def test_applied_weights(self, ex1):
        applied = apply_upgrades(ex1, {1})
        assert applied[2] == 10 and applied[5] == 10 and applied[7] == 10
        assert applied[3] == 7 and applied[8] == 3

    def test_matches_naive_recompute(self):
        rng = random.Random(7)
        checked = 0
        while checked < 1000:
            n = rng.randint(2, 14)
            cfg = GeneratorConfig(n=n, seed=rng.randrange(2**32), w_max=9,
                                  delta_max=9, shape="uniform-attachment")
            tree = random_tree(cfg)
            pool = sorted(tree.non_leaves)
            for _ in range(4):
                s = frozenset(rng.sample(pool, rng.randint(0, len(pool))))
                assert evaluate_min_distance(tree, s) == naive_min_distance(tree, s)
                checked += 1

    def test_monotone_in_set(self):
        rng = random.Random(11)
        for trial in range(100):
            tree = random_tree(GeneratorConfig(
                n=rng.randint(3, 12), seed=trial, w_max=8, delta_max=8))
            pool = sorted(tree.non_leaves)
            small = frozenset(rng.sample(pool, rng.randint(0, len(pool))))
            big = small | frozenset(rng.sample(pool, rng.randint(0, len(pool))))
            lo = evaluate_min_distance(tree, ())
            hi = all_upgraded_min_distance(tree)
            vs, vb = evaluate_min_distance(tree, small), evaluate_min_distance(tree, big)
            assert lo <= vs <= vb <= hi


class TestAllUpgraded:
    def test_ex1_ceiling(self, ex1):
        assert all_upgraded_min_distance(ex1) == 20

    def test_single_edge(self):
        assert all_upgraded_min_distance(build_tree([(2, 1, 5, 7)], 1)) == 7

    def test_no_gain_when_u_equals_w(self):
        tree = random_tree(GeneratorConfig(n=9, seed=5, w_max=9, delta_max=0))
        assert all_upgraded_min_distance(tree) == evaluate_min_distance(tree, ())

    def test_ex1_original_records_intact(self, ex1):
        # fixture must stay the canonical instance used everywhere
        assert ex1.w[5] == 1 and ex1.w[6] == 8 and ex1.w[3] == 7
        assert all(u == 10 for u in ex1.u.values())
        assert EX1_RECORDS[0] == (2, 1, 6, 10)
