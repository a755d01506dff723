import math
import random

import pytest

from interdict import (
    TargetUnreachable,
    all_upgraded_min_distance,
    evaluate_min_distance,
    solve_cost,
    solve_max,
)


class TestGolden:
    def test_target_13(self, ex1):
        result = solve_cost(ex1, 13)
        assert result.kstar == 1
        assert result.solution.upgraded == {1}
        assert result.solution.value == 13

    def test_target_is_baseline(self, ex1):
        result = solve_cost(ex1, 7)
        assert result.kstar == 0
        assert result.solution.upgraded == frozenset()

    def test_target_14(self, ex1):
        result = solve_cost(ex1, 14)
        assert result.kstar == 2
        assert result.solution.value >= 14

    def test_target_zero(self, ex1):
        assert solve_cost(ex1, 0).kstar == 0

    def test_unreachable(self, ex1):
        with pytest.raises(TargetUnreachable) as err:
            solve_cost(ex1, 21)
        assert err.value.ceiling == 20
        assert "ceiling 20" in str(err.value)

    def test_ceiling_itself_reachable(self, ex1):
        result = solve_cost(ex1, 20)
        assert result.kstar == 4
        assert result.solution.value == 20

    def test_negative_target(self, ex1):
        with pytest.raises(ValueError):
            solve_cost(ex1, -3)


class TestMinimality:
    def test_bracket_invariant(self, battery):
        rng = random.Random(5)
        for tree in rng.sample(battery, 40):
            f0 = evaluate_min_distance(tree, ())
            ceiling = all_upgraded_min_distance(tree)
            targets = sorted({f0, ceiling, (f0 + ceiling) // 2,
                              min(f0 + 1, ceiling)})
            for target in targets:
                result = solve_cost(tree, target)
                assert result.solution.value >= target
                assert solve_max(tree, result.kstar).value >= target
                if result.kstar > 0:
                    assert solve_max(tree, result.kstar - 1).value < target
                assert len(result.solution.upgraded) <= result.kstar

    def test_duality(self, battery):
        rng = random.Random(6)
        for tree in rng.sample(battery, 25):
            cap = len(tree.non_leaves)
            for k in range(cap + 1):
                value = solve_max(tree, k).value
                assert solve_cost(tree, value).kstar <= k

    def test_probe_count_bound(self, battery):
        rng = random.Random(7)
        for tree in rng.sample(battery, 50):
            cap = len(tree.non_leaves)
            ceiling = all_upgraded_min_distance(tree)
            result = solve_cost(tree, ceiling)
            assert len(result.query.probes) <= math.ceil(math.log2(cap + 1)) + 2

    def test_probes_monotone_consistent(self, battery):
        rng = random.Random(8)
        for tree in rng.sample(battery, 30):
            ceiling = all_upgraded_min_distance(tree)
            result = solve_cost(tree, ceiling)
            by_budget = sorted(result.query.probes)
            for (k1, v1), (k2, v2) in zip(by_budget, by_budget[1:]):
                assert k1 < k2 and v1 <= v2
