"""Shared exception types and default resource budgets."""

from __future__ import annotations

# Branch-node cap for the exact matching / extremal searches.
DEFAULT_NODE_BUDGET = 10**8
# Largest C(n, r) any full enumeration (oracle counts, materialized
# constructions, coupling sweeps) is allowed to walk.
DEFAULT_ENUM_BUDGET = 10**7
# Largest r-set universe the extremal search accepts without an explicit
# raise of the cap.
DEFAULT_UNIVERSE_CAP = 64


class ParameterError(ValueError):
    """A precondition on user-supplied parameters is violated."""


class ResourceBudgetError(RuntimeError):
    """A search or enumeration budget ran out before completion.

    ``best_size`` / ``best_edges`` carry the best lower bound found so far
    when the interrupted computation had one; they are never a silent
    substitute for the exact answer.
    """

    def __init__(self, message: str, best_size: int | None = None,
                 best_edges: tuple[int, ...] | None = None):
        super().__init__(message)
        self.best_size = best_size
        self.best_edges = best_edges
