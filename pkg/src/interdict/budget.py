"""Minimum-budget search: fewest upgrades to reach a target distance.

The optimum value of the budgeted solve is non-decreasing in the budget, so
the smallest sufficient budget is found by bisection over [0, upgradable
count], one full solve per probe. The search keeps the invariant
``value(lo) < target <= value(hi)`` after explicitly checking budget 0 and
the all-upgraded ceiling, so the answer is minimal by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TargetUnreachable
from .solver import solve_max
from .tree import RootedTree, Solution, all_upgraded_min_distance


@dataclass(frozen=True)
class BudgetQuery:
    """Trace of one search: target, final bracket, probes as (budget, value)."""

    target: int
    bounds: tuple[int, int]
    probes: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CostResult:
    """Minimal budget, a witnessing solution of value >= target, and the query."""

    kstar: int
    solution: Solution
    query: BudgetQuery


def solve_cost(tree: RootedTree, target: int) -> CostResult:
    """Smallest number of node upgrades whose optimum reaches ``target``.

    Raises :class:`TargetUnreachable` (carrying the ceiling) when even
    upgrading every non-leaf node falls short.
    """
    if target < 0:
        raise ValueError(f"target must be >= 0, got {target}")
    ceiling = all_upgraded_min_distance(tree)
    if target > ceiling:
        raise TargetUnreachable(target, ceiling)

    cache: dict[int, Solution] = {}
    probes: list[tuple[int, int]] = []

    def probe(k: int) -> Solution:
        sol = solve_max(tree, k)
        cache[k] = sol
        probes.append((k, sol.value))
        return sol

    base = probe(0)
    if base.value >= target:
        return CostResult(0, base, BudgetQuery(target, (0, 0), tuple(probes)))

    lo, hi = 0, len(tree.non_leaves)  # value(hi) = ceiling >= target
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if probe(mid).value >= target:
            hi = mid
        else:
            lo = mid
    witness = cache.get(hi) or probe(hi)
    return CostResult(hi, witness, BudgetQuery(target, (lo, hi), tuple(probes)))
