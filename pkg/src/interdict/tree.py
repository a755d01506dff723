"""Rooted edge-weighted trees and the minimum root-leaf distance evaluator.

Every edge is keyed by its child endpoint, so a node ``v`` other than the
root identifies the unique edge ``(parent(v), v)``. Each edge carries a base
length ``w`` and an upgraded length ``u`` with ``0 <= w <= u``. Upgrading a
non-leaf node raises every edge from that node to its children from ``w``
to ``u``; the quantity being attacked or defended is the minimum over all
leaves of the root-to-leaf path length.

Trees are immutable after construction and safe to share across threads.
Use :func:`build_tree` to construct one; it performs all validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    CycleDetected,
    DisconnectedInput,
    DuplicateChild,
    LeafInSet,
    NegativeWeight,
    TrivialTree,
    UpgradeBelowBase,
)

EdgeRecord = tuple[int, int, int, int]  # (child, parent, w, u)


class RootedTree:
    """Immutable rooted tree with per-edge base and upgraded lengths.

    Do not call the constructor directly; it assumes pre-validated input.
    :func:`build_tree` validates and builds.
    """

    __slots__ = (
        "node_count",
        "root",
        "parent",
        "children",
        "w",
        "u",
        "nodes",
        "leaves",
        "non_leaves",
        "_index",
        "_parent_idx",
        "_w_arr",
        "_u_arr",
        "_flat_paths",
        "_path_offsets",
    )

    def __init__(self, parent: Mapping[int, int], w: Mapping[int, int],
                 u: Mapping[int, int], root: int):
        self.root = root
        self.parent = dict(parent)
        self.w = dict(w)
        self.u = dict(u)
        self.node_count = len(self.parent) + 1

        children: dict[int, list[int]] = {root: []}
        for c in self.parent:
            children.setdefault(c, [])
        for c, p in self.parent.items():
            children[p].append(c)
        self.children = {v: tuple(sorted(cs)) for v, cs in children.items()}

        self.nodes = tuple(sorted(self.children))
        self.leaves = frozenset(v for v, cs in self.children.items() if not cs)
        self.non_leaves = frozenset(self.children) - self.leaves

        # Dense arrays for the vectorized evaluator. The root's edge slot is
        # unused and stays at weight 0.
        n = self.node_count
        self._index = {v: i for i, v in enumerate(self.nodes)}
        self._parent_idx = np.zeros(n, dtype=np.int64)
        self._w_arr = np.zeros(n, dtype=np.int64)
        self._u_arr = np.zeros(n, dtype=np.int64)
        for c, p in self.parent.items():
            i = self._index[c]
            self._parent_idx[i] = self._index[p]
            self._w_arr[i] = self.w[c]
            self._u_arr[i] = self.u[c]

        flat: list[int] = []
        offsets: list[int] = []
        for leaf in sorted(self.leaves):
            offsets.append(len(flat))
            path = []
            v = leaf
            while v != root:
                path.append(self._index[v])
                v = self.parent[v]
            flat.extend(reversed(path))
        self._flat_paths = np.asarray(flat, dtype=np.int64)
        self._path_offsets = np.asarray(offsets, dtype=np.int64)

    def degree(self, v: int) -> int:
        """Undirected degree: child edges plus the parent edge (if any)."""
        return len(self.children[v]) + (0 if v == self.root else 1)

    def is_leaf(self, v: int) -> bool:
        return v in self.leaves

    def delta(self, edge: int) -> int:
        """Upgrade gain of an edge (child-keyed): u - w."""
        return self.u[edge] - self.w[edge]

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (f"RootedTree(n={self.node_count}, root={self.root}, "
                f"leaves={len(self.leaves)})")


@dataclass(frozen=True)
class Solution:
    """An upgrade set together with its objective value.

    ``applied_weights`` maps every edge (child-keyed) to the length it takes
    once the set is applied: ``u`` if the edge's parent endpoint is upgraded,
    ``w`` otherwise. ``value`` is the minimum root-leaf distance under those
    lengths.
    """

    value: int
    upgraded: frozenset[int]
    applied_weights: dict[int, int]


def build_tree(edge_records: Sequence[EdgeRecord], root: int) -> RootedTree:
    """Validate edge records and build a :class:`RootedTree`.

    Each record is ``(child, parent, w, u)``. There must be exactly one
    record per non-root node, weights must satisfy ``0 <= w <= u``, and the
    records must form a single tree hanging from ``root``.
    """
    if not edge_records:
        raise TrivialTree("an instance needs at least two nodes (one edge)")

    parent: dict[int, int] = {}
    w: dict[int, int] = {}
    u: dict[int, int] = {}
    for child, par, wv, uv in edge_records:
        if child == par:
            raise CycleDetected(f"self-loop at node {child}")
        if child in parent:
            raise DuplicateChild(f"node {child} has two parent edges")
        if wv < 0 or uv < 0:
            raise NegativeWeight(f"edge into node {child}: w={wv}, u={uv}")
        if wv > uv:
            raise UpgradeBelowBase(f"edge into node {child}: w={wv} > u={uv}")
        parent[child] = par
        w[child] = wv
        u[child] = uv

    if root in parent:
        raise CycleDetected(f"root {root} has a parent edge")
    stray = set(parent.values()) - set(parent) - {root}
    if stray:
        raise DisconnectedInput(
            f"nodes {sorted(stray)} are used as parents but never reach the root")

    # BFS from the root; anything unvisited sits on a cycle.
    children: dict[int, list[int]] = {}
    for c, p in parent.items():
        children.setdefault(p, []).append(c)
    seen = {root}
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for c in children.get(v, ()):
                seen.add(c)
                nxt.append(c)
        frontier = nxt
    if len(seen) != len(parent) + 1:
        cyclic = sorted(set(parent) - seen)
        raise CycleDetected(f"nodes {cyclic} form a cycle")

    return RootedTree(parent, w, u, root)


def apply_upgrades(tree: RootedTree, upgraded: Iterable[int]) -> dict[int, int]:
    """Weight function after upgrading ``upgraded``: u on their child edges."""
    s = set(upgraded)
    return {c: (tree.u[c] if p in s else tree.w[c])
            for c, p in tree.parent.items()}


def evaluate_min_distance(tree: RootedTree, upgraded: Iterable[int]) -> int:
    """Minimum root-leaf distance after upgrading the given non-leaf nodes.

    This is the ground-truth objective: every other routine in the package
    is checked against it. Raises :class:`LeafInSet` if the set contains a
    leaf and ``ValueError`` for unknown node ids.
    """
    s = frozenset(upgraded)
    bad_leaves = s & tree.leaves
    if bad_leaves:
        raise LeafInSet(f"cannot upgrade leaf nodes {sorted(bad_leaves)}")
    unknown = [v for v in s if v not in tree._index]
    if unknown:
        raise ValueError(f"unknown node ids {sorted(unknown)}")

    mask = np.zeros(tree.node_count, dtype=bool)
    if s:
        mask[[tree._index[v] for v in s]] = True
    lengths = np.where(mask[tree._parent_idx], tree._u_arr, tree._w_arr)
    sums = np.add.reduceat(lengths[tree._flat_paths], tree._path_offsets)
    return int(sums.min())


def all_upgraded_min_distance(tree: RootedTree) -> int:
    """Objective when every non-leaf node is upgraded: the feasibility ceiling."""
    return evaluate_min_distance(tree, tree.non_leaves)
