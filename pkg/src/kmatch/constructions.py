"""Candidate extremal families built from capture blocks.

The common pattern: fix blocks T_1, ..., T_{a-1} of size k+2i and take
every r-set meeting some block in at least k+i vertices. Disjoint
consecutive blocks give the canonical block family; a single block gives
the classical complete-intersection optimizers; the clique-type candidate
is simply a complete hypergraph on the first n0 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (Hypergraph, Params, VertexSet, iter_subset_masks,
                   require_enumerable)
from .errors import ParameterError


@dataclass(frozen=True)
class KSetFamily:
    """A nonempty family of equal-size vertex sets, canonically ordered."""

    n: int
    sets: tuple[VertexSet, ...]

    def __post_init__(self):
        if not self.sets:
            raise ParameterError("set family must be nonempty")
        object.__setattr__(self, "sets", tuple(sorted(self.sets)))
        card = len(self.sets[0])
        full = (1 << self.n) - 1
        for s in self.sets:
            if len(s) != card:
                raise ParameterError("all member sets must have equal cardinality")
            if s.mask & ~full:
                raise ParameterError(f"member {sorted(s)} uses vertices outside [0, {self.n})")
        if len({s.mask for s in self.sets}) != len(self.sets):
            raise ParameterError("duplicate member sets are forbidden")

    @property
    def cardinality(self) -> int:
        return len(self.sets[0])

    def pairwise_disjoint(self) -> bool:
        seen = 0
        for s in self.sets:
            if seen & s.mask:
                return False
            seen |= s.mask
        return True


def generalized_family(n: int, r: int, k: int, i: int, family: KSetFamily) -> Hypergraph:
    """All r-sets of [0, n) meeting some member block in >= k+i vertices.

    Blocks may overlap; their common cardinality must equal k+2i.
    """
    if k < 1 or i < 0:
        raise ParameterError(f"need k >= 1 and i >= 0, got k={k}, i={i}")
    if family.n != n:
        raise ParameterError(f"family lives on [{family.n}], expected [{n}]")
    if family.cardinality != k + 2 * i:
        raise ParameterError(
            f"member cardinality {family.cardinality} != k + 2i = {k + 2 * i}")
    if k + i > r:
        raise ParameterError(f"capture threshold k+i={k + i} exceeds r={r}")
    if r > n:
        raise ParameterError(f"need r <= n, got r={r}, n={n}")
    require_enumerable(n, r)
    blocks = [s.mask for s in family.sets]
    need = k + i
    edges = [m for m in iter_subset_masks(n, r)
             if any((m & b).bit_count() >= need for b in blocks)]
    return Hypergraph.from_masks(n, r, edges)


def canonical_blocks(p: Params) -> KSetFamily:
    """a-1 pairwise disjoint consecutive blocks of size k+2i, lowest indices first."""
    p.require_blocks()
    size = p.block_size
    sets = [VertexSet(range(j * size, (j + 1) * size)) for j in range(p.a - 1)]
    return KSetFamily(p.n, tuple(sets))


def frankl_family(p: Params) -> Hypergraph:
    """The canonical disjoint-block family for (n, r, k, a, i)."""
    return generalized_family(p.n, p.r, p.k, p.i, canonical_blocks(p))


def ekr_b_family(n: int, r: int, k: int, i: int) -> Hypergraph:
    """Single-block family B_i: r-sets meeting [0, k+2i) in >= k+i vertices."""
    if not 0 <= 2 * i <= n - k:
        raise ParameterError(f"need 0 <= i <= (n-k)/2, got i={i}, n={n}, k={k}")
    block = KSetFamily(n, (VertexSet(range(k + 2 * i)),))
    return generalized_family(n, r, k, i, block)


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    """All r-subsets of [0, n)."""
    require_enumerable(n, r)
    return Hypergraph.from_masks(n, r, iter_subset_masks(n, r))


def h0_family(p: Params) -> Hypergraph:
    """Clique-type candidate: all r-sets of the first n0 vertices of [0, n).

    Defined only when r >= (a-1)(k-1) + 1, which makes n0 >= r.
    """
    if p.r < (p.a - 1) * (p.k - 1) + 1:
        raise ParameterError(
            f"clique-type candidate needs r >= (a-1)(k-1)+1 = "
            f"{(p.a - 1) * (p.k - 1) + 1}, got r={p.r}")
    n0 = p.n0
    if p.n < n0:
        raise ParameterError(f"need n >= n0 = {n0}, got n={p.n}")
    require_enumerable(n0, p.r)
    return Hypergraph.from_masks(p.n, p.r, iter_subset_masks(n0, p.r))
