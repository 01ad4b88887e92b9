"""Index-shift compression of hypergraphs and stabilization sweeps.

The primary direction ("up") rewrites an edge by replacing vertex i with
vertex j > i whenever the rewritten edge is absent; "down" is the mirror
convention common elsewhere, replacing j with i. Either way the edge count
is preserved and every effective application strictly moves the total
vertex-label sum, which bounds stabilization by n * r * |edges| steps.
"""

from __future__ import annotations

from .core import Hypergraph
from .errors import ParameterError

DIRECTIONS = ("up", "down")


def _check_pair(h: Hypergraph, i: int, j: int) -> None:
    if not (0 <= i < h.n and 0 <= j < h.n):
        raise ParameterError(f"shift vertices must lie in [0, {h.n}), got ({i}, {j})")
    if i >= j:
        raise ParameterError(f"shift needs i < j, got ({i}, {j})")


def shift(h: Hypergraph, i: int, j: int, direction: str = "up") -> Hypergraph:
    """Apply the (i, j)-shift to every edge; i < j required.

    direction="up": move i to j where possible; "down": move j to i.
    """
    if direction not in DIRECTIONS:
        raise ParameterError(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    _check_pair(h, i, j)
    src, dst = (i, j) if direction == "up" else (j, i)
    edge_set = set(h.edge_masks)
    sbit, dbit = 1 << src, 1 << dst
    out = []
    for e in h.edge_masks:
        if e & sbit and not e & dbit:
            moved = (e ^ sbit) | dbit
            out.append(e if moved in edge_set else moved)
        else:
            out.append(e)
    shifted = Hypergraph.from_masks(h.n, h.r, out)
    assert len(shifted.edge_masks) == len(h.edge_masks)
    return shifted


def is_stable(h: Hypergraph, direction: str = "up") -> bool:
    """Fixed under every (i, j)-shift, i < j."""
    for i in range(h.n - 1):
        for j in range(i + 1, h.n):
            if shift(h, i, j, direction) != h:
                return False
    return True


def stabilize(h: Hypergraph, direction: str = "up") -> tuple[Hypergraph, int]:
    """Shift until fixed; returns the stable hypergraph and the number of
    effective (hypergraph-changing) shift applications.

    Sweep order is row-major ascending over (i, j) pairs, repeated until a
    full pass changes nothing. The label-sum potential caps effective
    applications at n * r * |edges|.
    """
    if direction not in DIRECTIONS:
        raise ParameterError(f"direction must be one of {DIRECTIONS}, got {direction!r}")
    cap = h.n * h.r * max(len(h.edge_masks), 1)
    effective = 0
    while True:
        changed = False
        for i in range(h.n - 1):
            for j in range(i + 1, h.n):
                nxt = shift(h, i, j, direction)
                if nxt != h:
                    h = nxt
                    effective += 1
                    changed = True
                    if effective > cap:
                        raise AssertionError(
                            "stabilization exceeded the potential-function cap")
        if not changed:
            return h, effective
