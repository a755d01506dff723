"""Seeded random instance generation for testing and benchmarking.

Four shapes cover the structurally distinct regimes: shallow wide trees
(uniform-attachment), long spines with pendant leaves (caterpillar), one
long handle into a fan of leaves (broom), and bounded-fanout trees
(binary-ish). Identical configs produce identical instances, byte for byte
through the text format.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .tree import RootedTree, build_tree

SHAPES = ("uniform-attachment", "caterpillar", "broom", "binary-ish")

DEFAULT_W_MAX = 100
DEFAULT_DELTA_MAX = 100


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    seed: int
    w_max: int = DEFAULT_W_MAX
    delta_max: int = DEFAULT_DELTA_MAX
    shape: str = "uniform-attachment"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.w_max < 0 or self.delta_max < 0:
            raise ValueError("w_max and delta_max must be >= 0")
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}; pick one of {SHAPES}")


def _parents(config: GeneratorConfig, rng: random.Random) -> dict[int, int]:
    """Parent id for every node 2..n; node 1 is the root."""
    n = config.n
    if config.shape == "uniform-attachment":
        return {i: rng.randrange(1, i) for i in range(2, n + 1)}
    if config.shape == "caterpillar":
        spine = max(2, (n + 1) // 2)
        parents = {i: i - 1 for i in range(2, spine + 1)}
        for i in range(spine + 1, n + 1):
            parents[i] = rng.randrange(1, spine + 1)
        return parents
    if config.shape == "broom":
        handle = max(1, n // 2)
        parents = {i: i - 1 for i in range(2, handle + 2)}
        for i in range(handle + 2, n + 1):
            parents[i] = handle + 1
        return parents
    # binary-ish: attach to a uniformly random node with < 2 children
    open_slots = [1]
    child_count = {1: 0}
    parents = {}
    for i in range(2, n + 1):
        idx = rng.randrange(len(open_slots))
        p = open_slots[idx]
        parents[i] = p
        child_count[p] += 1
        if child_count[p] == 2:
            open_slots[idx] = open_slots[-1]
            open_slots.pop()
        open_slots.append(i)
        child_count[i] = 0
    return parents


def random_tree(config: GeneratorConfig) -> RootedTree:
    """Generate a validated instance; deterministic per config."""
    rng = random.Random(config.seed)
    parents = _parents(config, rng)
    records = []
    for child in range(2, config.n + 1):
        w = rng.randint(0, config.w_max)
        u = w + rng.randint(0, config.delta_max)
        records.append((child, parents[child], w, u))
    return build_tree(records, root=1)
