"""Exact shortest-path interdiction on rooted trees via node upgrades.

Upgrading a node raises every edge to its children from its base length to
its upgraded length at unit cost. :func:`solve_max` maximizes the shortest
root-leaf distance under a budget of upgrades; :func:`solve_cost` finds the
smallest budget reaching a target distance. Both are exact; brute-force
oracles and a seeded instance generator support verification.
"""

from .budget import BudgetQuery, CostResult, solve_cost
from .chains import ChainTable, chain_g_table
from .decompose import (Chain, Decomposition, compute_layers,
                        critical_structure, decompose, extract_chains,
                        processing_order)
from .errors import (CycleDetected, DisconnectedInput, DuplicateChild,
                     InfeasibleIndex, InstanceError, InterdictError,
                     LeafInSet, NegativeWeight, ParseError, TargetUnreachable,
                     TooLargeForOracle, TrivialTree, UpgradeBelowBase)
from .generate import SHAPES, GeneratorConfig, random_tree
from .instances import (format_instance, load_instance, parse_instance,
                        save_instance)
from .oracle import ORACLE_LIMIT, brute_force_cost, brute_force_max
from .solver import DpTables, TableSlice, build_tables, solve_max
from .tree import (RootedTree, Solution, all_upgraded_min_distance,
                   apply_upgrades, build_tree, evaluate_min_distance)

__version__ = "0.1.0"

__all__ = [
    "BudgetQuery", "Chain", "ChainTable", "CostResult", "CycleDetected",
    "Decomposition", "DisconnectedInput", "DpTables", "DuplicateChild",
    "GeneratorConfig", "InfeasibleIndex", "InstanceError", "InterdictError",
    "LeafInSet", "NegativeWeight", "ORACLE_LIMIT", "ParseError", "RootedTree",
    "SHAPES", "Solution", "TableSlice", "TargetUnreachable",
    "TooLargeForOracle", "TrivialTree", "UpgradeBelowBase",
    "all_upgraded_min_distance", "apply_upgrades", "brute_force_cost",
    "brute_force_max", "build_tables", "build_tree", "chain_g_table",
    "compute_layers", "critical_structure", "decompose", "evaluate_min_distance",
    "extract_chains", "format_instance", "load_instance", "parse_instance",
    "processing_order", "random_tree", "save_instance", "solve_cost",
    "solve_max",
]
