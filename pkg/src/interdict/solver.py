"""Budgeted dynamic program over the chain decomposition.

For a junction ``v`` with critical descendants ``h_1 < h_2 < ... < h_p``,
the q-th *branch* is the chain down to ``h_q`` plus the whole subtree below
``h_q``. Tables are indexed by ``(eps, k)`` where ``k`` is the exact number
of upgraded nodes inside the region and ``eps`` flags whether ``v`` itself
is one of them (the flag must agree across sibling branches, since ``v``'s
single upgrade raises the first edge of every chain at once).

Two merge steps build the tables bottom-up:

* serial: best branch value = max over ``k1 + k2 = k`` of
  chain ``g(eps, k1)`` plus the best full-subtree value below the chain
  with ``k2`` upgrades (0 if the chain bottoms out in a leaf);
* parallel: the first ``q`` branches combine by ``min`` (a path through
  any branch may be the shortest), maximizing over ``k1 + k2 - eps = k``
  so the shared upgrade of ``v`` is paid for once.

Both steps are (max,+) / (max,min) convolutions over dense budget arrays;
all feasible cells are contiguous, so no sparsity handling is needed. Cell
counts are clamped by the number of upgradable (non-leaf) nodes in each
region and by the overall budget, which keeps the whole solve within
O(n * K^2).

Ties in every argmax prefer eps=0, then the smallest branch-side budget,
which makes reported upgrade sets deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chains import ChainTable, chain_g_table
from .decompose import Decomposition, decompose
from .tree import RootedTree, Solution, apply_upgrades, evaluate_min_distance

_NEG = np.int64(np.iinfo(np.int64).min // 4)
_EMPTY = np.empty(0, dtype=np.int64)


@dataclass
class TableSlice:
    """One region's table: f0[k] = f(eps=0, k), f1[i] = f(eps=1, i+1).

    ``bp0``/``bp1`` record, per cell, the left-operand index of the maximizing
    split (chain budget for serial slices, q-th-branch budget for parallel
    slices); the left operand shares the cell's eps offset.
    """

    f0: np.ndarray
    f1: np.ndarray
    bp0: np.ndarray
    bp1: np.ndarray

    def get(self, eps: int, k: int) -> int | None:
        """Cell value, or None where the cell is infeasible."""
        if eps == 0:
            return int(self.f0[k]) if 0 <= k < len(self.f0) else None
        if eps == 1:
            return int(self.f1[k - 1]) if 1 <= k <= len(self.f1) else None
        return None

    def split(self, eps: int, k: int) -> int:
        """Left-operand budget of the maximizing split for a feasible cell."""
        raw = self.bp0[k] if eps == 0 else self.bp1[k - 1]
        return int(raw) + eps


@dataclass
class DpTables:
    """All tables of one solve, kept for reconstruction and inspection.

    ``serial[(v, q)]`` covers the q-th branch at junction ``v``;
    ``parallel[(v, q)]`` covers the union of branches ``1..q``. For the last
    q these describe the full subtree hanging at ``v``; ``subtree_best[v]``
    collapses that over eps (``subtree_eps`` records the argmax).
    """

    tree: RootedTree
    decomposition: Decomposition
    budget: int
    chain_tables: dict[int, ChainTable]
    serial: dict[tuple[int, int], TableSlice]
    parallel: dict[tuple[int, int], TableSlice]
    subtree_best: dict[int, np.ndarray]
    subtree_eps: dict[int, np.ndarray]


def _maxplus(a: np.ndarray, b: np.ndarray, out_len: int):
    """out[m] = max_{i+j=m} a[i]+b[j], arg = smallest maximizing i."""
    out = np.full(out_len, _NEG, dtype=np.int64)
    arg = np.zeros(out_len, dtype=np.int64)
    if out_len == 0:
        return out, arg
    if a.size <= b.size:
        for i in range(min(a.size, out_len)):
            m = min(b.size, out_len - i)
            seg = a[i] + b[:m]
            view = out[i:i + m]
            mask = seg > view
            view[mask] = seg[mask]
            arg[i:i + m][mask] = i
    else:
        # Iterate the shorter right operand, highest j first, so strict
        # improvement still leaves the smallest i on ties.
        for j in range(min(b.size, out_len) - 1, -1, -1):
            m = min(a.size, out_len - j)
            seg = b[j] + a[:m]
            view = out[j:j + m]
            mask = seg > view
            view[mask] = seg[mask]
            idx = np.nonzero(mask)[0]
            arg[j + idx] = idx
    assert out.min() > _NEG, "uncovered dp cell"
    return out, arg


def _maxmin(a: np.ndarray, b: np.ndarray, out_len: int):
    """out[m] = max_{i+j=m} min(a[i], b[j]), arg = smallest maximizing i."""
    out = np.full(out_len, _NEG, dtype=np.int64)
    arg = np.zeros(out_len, dtype=np.int64)
    if out_len == 0:
        return out, arg
    if a.size <= b.size:
        for i in range(min(a.size, out_len)):
            m = min(b.size, out_len - i)
            seg = np.minimum(a[i], b[:m])
            view = out[i:i + m]
            mask = seg > view
            view[mask] = seg[mask]
            arg[i:i + m][mask] = i
    else:
        for j in range(min(b.size, out_len) - 1, -1, -1):
            m = min(a.size, out_len - j)
            seg = np.minimum(b[j], a[:m])
            view = out[j:j + m]
            mask = seg > view
            view[mask] = seg[mask]
            idx = np.nonzero(mask)[0]
            arg[j + idx] = idx
    assert out.min() > _NEG, "uncovered dp cell"
    return out, arg


def _subtree_nonleaf_counts(tree: RootedTree) -> dict[int, int]:
    """Upgradable-node count of every node's subtree (leaves count 0)."""
    order = [tree.root]
    for v in order:
        order.extend(tree.children[v])
    counts = {v: (0 if tree.is_leaf(v) else 1) for v in tree.nodes}
    for v in reversed(order):
        for c in tree.children[v]:
            counts[v] += counts[c]
    return counts


def combine_serial(ct: ChainTable, below: np.ndarray | None,
                   cap: int, budget: int) -> TableSlice:
    """Merge a chain with the full-subtree table under its bottom node.

    ``below`` is the collapsed best-by-budget array of the subtree under the
    chain's bottom, or None when the bottom is a leaf (then all budget stays
    on the chain). ``cap`` is the upgradable-node count of the whole branch.
    """
    b = below if below is not None else np.zeros(1, dtype=np.int64)
    f0, bp0 = _maxplus(ct.g0, b, min(cap - 1, budget) + 1)
    len1 = min(cap, budget)
    if len1 > 0:
        f1, bp1 = _maxplus(ct.g1, b, len1)
    else:
        f1, bp1 = _EMPTY, _EMPTY
    return TableSlice(f0, f1, bp0, bp1)


def combine_parallel(branch: TableSlice, prefix: TableSlice,
                     cap: int, budget: int) -> TableSlice:
    """Min-combine a branch with the union of the branches before it.

    Matching eps on both sides is mandatory; with eps=1 the shared junction
    upgrade is counted once (k = k1 + k2 - 1). ``cap`` is the upgradable
    count of the combined region.
    """
    f0, bp0 = _maxmin(branch.f0, prefix.f0, min(cap - 1, budget) + 1)
    len1 = min(cap, budget)
    if len1 > 0 and branch.f1.size and prefix.f1.size:
        f1, bp1 = _maxmin(branch.f1, prefix.f1, len1)
    else:
        f1, bp1 = _EMPTY, _EMPTY
    return TableSlice(f0, f1, bp0, bp1)


def _collapse(sl: TableSlice) -> tuple[np.ndarray, np.ndarray]:
    """Best over eps per budget; ties keep eps=0."""
    kmax = max(len(sl.f0) - 1, len(sl.f1))
    best = np.full(kmax + 1, _NEG, dtype=np.int64)
    eps = np.zeros(kmax + 1, dtype=np.int64)
    best[: len(sl.f0)] = sl.f0
    if sl.f1.size:
        view = best[1: len(sl.f1) + 1]
        mask = sl.f1 > view
        view[mask] = sl.f1[mask]
        eps[1: len(sl.f1) + 1][mask] = 1
    assert best.min() > _NEG
    return best, eps


def build_tables(tree: RootedTree, budget: int) -> DpTables:
    """Run the full bottom-up pass; budgets above the upgradable count clamp."""
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    dec = decompose(tree)
    counts = _subtree_nonleaf_counts(tree)
    k_cap = min(budget, counts[tree.root])

    chain_tables = {bottom: chain_g_table(chain, k_cap)
                    for bottom, chain in dec.chains.items()}
    serial: dict[tuple[int, int], TableSlice] = {}
    parallel: dict[tuple[int, int], TableSlice] = {}
    subtree_best: dict[int, np.ndarray] = {}
    subtree_eps: dict[int, np.ndarray] = {}

    for v in dec.order:
        prefix: TableSlice | None = None
        prefix_cap = 0
        for q, h in enumerate(dec.cd[v], start=1):
            ct = chain_tables[h]
            below = None if tree.is_leaf(h) else subtree_best[h]
            branch_cap = 1 + (ct.chain.beta - 1) + counts[h]
            sl = combine_serial(ct, below, branch_cap, k_cap)
            serial[(v, q)] = sl
            if q == 1:
                prefix, prefix_cap = sl, branch_cap
            else:
                prefix_cap += branch_cap - 1
                prefix = combine_parallel(sl, prefix, prefix_cap, k_cap)
            parallel[(v, q)] = prefix
        assert prefix_cap == counts[v]
        subtree_best[v], subtree_eps[v] = _collapse(prefix)

    return DpTables(
        tree=tree,
        decomposition=dec,
        budget=k_cap,
        chain_tables=chain_tables,
        serial=serial,
        parallel=parallel,
        subtree_best=subtree_best,
        subtree_eps=subtree_eps,
    )


def _extract_upgrades(tables: DpTables) -> set[int]:
    """Walk backpointers from the root and materialize the upgrade set."""
    dec = tables.decomposition
    tree = tables.tree
    upgraded: set[int] = set()
    k_root = tables.budget
    stack = [(tree.root, int(tables.subtree_eps[tree.root][k_root]), k_root)]
    while stack:
        v, eps, k = stack.pop()
        cd = dec.cd[v]
        for q in range(len(cd), 0, -1):
            if q > 1:
                k1 = tables.parallel[(v, q)].split(eps, k)
                k = k - k1 + eps  # remainder flows to branches 1..q-1
            else:
                k1 = k
            sl = tables.serial[(v, q)]
            k_chain = sl.split(eps, k1)
            k_below = k1 - k_chain
            h = cd[q - 1]
            upgraded |= tables.chain_tables[h].upgraded_nodes(eps, k_chain)
            if k_below > 0:
                stack.append(
                    (h, int(tables.subtree_eps[h][k_below]), k_below))
    return upgraded


def solve_max(tree: RootedTree, budget: int) -> Solution:
    """Maximize the shortest root-leaf distance with at most ``budget``
    node upgrades; exact, with the realized upgrade set.

    The returned value is re-checked against the direct evaluator before
    returning, so a solution can never silently disagree with its set.
    """
    tables = build_tables(tree, budget)
    value = int(tables.subtree_best[tree.root][tables.budget])
    upgraded = frozenset(_extract_upgrades(tables))
    realized = evaluate_min_distance(tree, upgraded)
    if realized != value:
        raise RuntimeError(
            f"internal error: table value {value} but set realizes {realized}")
    return Solution(value=value, upgraded=upgraded,
                    applied_weights=apply_upgrades(tree, upgraded))
