"""Exception types shared across the package."""


class InterdictError(Exception):
    """Base class for all package errors."""


class InstanceError(InterdictError):
    """An instance (in-memory or on disk) is structurally invalid."""


class ParseError(InstanceError):
    """Malformed instance text. Carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TrivialTree(InstanceError):
    """Fewer than two nodes: there is no root-leaf path to harden."""


class DuplicateChild(InstanceError):
    """A node appears as the child endpoint of more than one edge."""


class CycleDetected(InstanceError):
    """The parent map contains a cycle (or gives the root a parent)."""


class DisconnectedInput(InstanceError):
    """Some node is not reachable from the root."""


class NegativeWeight(InstanceError):
    """Edge lengths must be non-negative integers."""


class UpgradeBelowBase(InstanceError):
    """An edge's upgraded length is smaller than its base length."""


class LeafInSet(InterdictError):
    """An upgrade set contains a leaf; upgrading a leaf touches no edge."""


class InfeasibleIndex(InterdictError):
    """A chain table was queried outside its feasible (eps, k) domain."""


class TooLargeForOracle(InterdictError):
    """The instance exceeds the brute-force enumeration guard."""


class TargetUnreachable(InterdictError):
    """The requested distance exceeds the all-upgraded ceiling."""

    def __init__(self, target: int, ceiling: int):
        super().__init__(f"target {target} unreachable: ceiling {ceiling}")
        self.target = target
        self.ceiling = ceiling
