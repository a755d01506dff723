import random

import pytest

from interdict import (
    all_upgraded_min_distance,
    brute_force_max,
    build_tables,
    build_tree,
    evaluate_min_distance,
    solve_max,
)


def branch_index(tables, v, h):
    """1-based branch position of critical descendant h at junction v."""
    return tables.decomposition.cd[v].index(h) + 1


class TestTables:
    """Slice values of the golden instance, checked cell by cell."""

    def test_serial_branch_under_root_via_v7(self, ex1):
        tables = build_tables(ex1, budget=1)
        sl = tables.serial[(1, branch_index(tables, 1, 7))]
        assert sl.get(0, 0) == 7
        assert sl.get(0, 1) == 14
        assert sl.get(1, 1) == 13

    def test_serial_branch_under_root_via_v2(self, ex1):
        tables = build_tables(ex1, budget=1)
        sl = tables.serial[(1, branch_index(tables, 1, 2))]
        assert sl.get(0, 0) == 10
        assert sl.get(0, 1) == 16
        assert sl.get(1, 1) == 14

    def test_serial_branch_under_root_via_v6(self, ex1):
        tables = build_tables(ex1, budget=1)
        sl = tables.serial[(1, branch_index(tables, 1, 6))]
        assert (sl.get(0, 0), sl.get(0, 1), sl.get(1, 1)) == (9, 11, 18)

    def test_parallel_full_subtree_v7(self, ex1):
        tables = build_tables(ex1, budget=1)
        sl = tables.parallel[(7, 2)]
        assert sl.get(0, 0) == 3
        assert sl.get(0, 1) == 3
        assert sl.get(1, 1) == 10

    def test_parallel_full_subtree_v2(self, ex1):
        tables = build_tables(ex1, budget=1)
        sl = tables.parallel[(2, 2)]
        assert sl.get(0, 0) == 4
        assert sl.get(1, 1) == 10

    def test_parallel_full_tree(self, ex1):
        tables = build_tables(ex1, budget=1)
        sl = tables.parallel[(1, 3)]
        assert sl.get(0, 0) == 7
        assert sl.get(0, 1) == 9
        assert sl.get(1, 1) == 13

    def test_best_is_max_over_eps(self, ex1):
        tables = build_tables(ex1, budget=3)
        for v in tables.decomposition.order:
            q = len(tables.decomposition.cd[v])
            sl = tables.parallel[(v, q)]
            best = tables.subtree_best[v]
            for k in range(len(best)):
                cells = [c for c in (sl.get(0, k), sl.get(1, k)) if c is not None]
                assert best[k] == max(cells)

    def test_leaf_bottom_branch_budget_zero(self, ex1):
        tables = build_tables(ex1, budget=0)
        sl = tables.serial[(7, branch_index(tables, 7, 8))]
        assert sl.get(0, 0) == 3
        assert sl.get(1, 1) is None

    def test_infeasible_cells_absent(self, ex1):
        tables = build_tables(ex1, budget=1)
        sl = tables.parallel[(7, 2)]
        assert sl.get(1, 0) is None
        assert sl.get(0, 5) is None


class TestSolve:
    def test_golden_budget_one(self, ex1):
        sol = solve_max(ex1, 1)
        assert sol.value == 13
        assert sol.upgraded == {1}

    def test_budget_zero(self, ex1):
        sol = solve_max(ex1, 0)
        assert sol.value == 7 and sol.upgraded == frozenset()

    def test_budget_two(self, ex1):
        sol = solve_max(ex1, 2)
        assert sol.value == 14
        assert evaluate_min_distance(ex1, sol.upgraded) == 14

    def test_single_edge(self):
        tree = build_tree([(2, 1, 5, 7)], root=1)
        sol = solve_max(tree, 1)
        assert sol.value == 7 and sol.upgraded == {1}

    def test_budget_clamped_to_non_leaf_count(self, ex1):
        sol = solve_max(ex1, 100)
        assert sol.value == all_upgraded_min_distance(ex1) == 20
        assert len(sol.upgraded) == len(ex1.non_leaves)

    def test_negative_budget(self, ex1):
        with pytest.raises(ValueError):
            solve_max(ex1, -1)

    def test_applied_weights_consistent(self, ex1):
        sol = solve_max(ex1, 1)
        for edge, parent in ex1.parent.items():
            expected = ex1.u[edge] if parent in sol.upgraded else ex1.w[edge]
            assert sol.applied_weights[edge] == expected

    def test_deterministic_sets(self, ex1):
        reference = solve_max(ex1, 2)
        for _ in range(5):
            again = solve_max(ex1, 2)
            assert again.value == reference.value
            assert again.upgraded == reference.upgraded


class TestAgainstOracle:
    def test_small_battery(self, battery):
        rng = random.Random(3)
        for tree in rng.sample(battery, 60):
            for budget in range(len(tree.non_leaves) + 1):
                sol = solve_max(tree, budget)
                value, _ = brute_force_max(tree, budget)
                assert sol.value == value
                assert len(sol.upgraded) <= budget
                assert evaluate_min_distance(tree, sol.upgraded) == sol.value

    def test_budget_monotone_and_ceiling(self, battery):
        rng = random.Random(4)
        for tree in rng.sample(battery, 40):
            cap = len(tree.non_leaves)
            values = [solve_max(tree, k).value for k in range(cap + 1)]
            assert all(a <= b for a, b in zip(values, values[1:]))
            assert values[-1] == all_upgraded_min_distance(tree)
            assert values[0] == evaluate_min_distance(tree, ())
