"""Exact k-matching computations.

Two edges conflict for k-matching purposes iff their intersection has at
least k vertices, so a k-matching is exactly a clique of the complementary
"compatibility" graph over the edge list. The solver is a deterministic
branch-and-bound over edges in colexicographic order with a greedy-coloring
upper bound, seeded by the greedy maximal matching and capped globally by
the k-set counting bound floor(C(n,k) / C(r,k)).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import Hypergraph, VertexSet
from .errors import DEFAULT_NODE_BUDGET, ParameterError, ResourceBudgetError


@dataclass(frozen=True)
class MatchingWitness:
    """A k-matching: pairwise intersections of members have < k vertices."""

    k: int
    edges: tuple[VertexSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        masks = [e.mask for e in self.edges]
        for idx in range(len(masks)):
            for jdx in range(idx + 1, len(masks)):
                if (masks[idx] & masks[jdx]).bit_count() >= self.k:
                    raise ParameterError(
                        f"members {sorted(self.edges[idx])} and "
                        f"{sorted(self.edges[jdx])} share >= k={self.k} vertices")

    def __len__(self) -> int:
        return len(self.edges)


def is_k_matching(h: Hypergraph, edges, k: int) -> bool:
    """Whether the given edges of ``h`` pairwise intersect in < k vertices.

    The edge list is read as a set (duplicates collapse); every member must
    be an edge of ``h``.
    """
    if k < 1:
        raise ParameterError(f"need k >= 1, got k={k}")
    edge_set = set(h.edge_masks)
    masks = []
    for e in edges:
        if e.mask not in edge_set:
            raise ParameterError(f"{sorted(e)} is not an edge of the hypergraph")
        masks.append(e.mask)
    masks = sorted(set(masks))
    return all((masks[idx] & masks[jdx]).bit_count() < k
               for idx in range(len(masks))
               for jdx in range(idx + 1, len(masks)))


def _compat_adj(edge_masks: tuple[int, ...], k: int) -> list[int]:
    """Bitmask adjacency of the compatibility graph over edge indices."""
    m = len(edge_masks)
    adj = [0] * m
    for idx in range(m):
        ei = edge_masks[idx]
        for jdx in range(idx + 1, m):
            if (ei & edge_masks[jdx]).bit_count() < k:
                adj[idx] |= 1 << jdx
                adj[jdx] |= 1 << idx
    return adj


def _color_bound(cand: int, adj: list[int]) -> int:
    """Greedy proper coloring class count of the candidate subgraph; an
    upper bound on any clique inside ``cand``."""
    classes: list[int] = []
    m = cand
    while m:
        low = m & -m
        m ^= low
        av = adj[low.bit_length() - 1]
        for pos, cls in enumerate(classes):
            if cls & av == 0:
                classes[pos] = cls | low
                break
        else:
            classes.append(low)
    return len(classes)


class _CliqueSearch:
    """Deterministic DFS for maximum / target-size compatibility cliques.

    Branch order is fixed: lowest edge index (= colex-least edge) first,
    include before exclude. ``floor_size`` seeds the incumbent value;
    ``target`` switches to decision mode, stopping at the first clique of
    that size.
    """

    def __init__(self, adj: list[int], budget: int,
                 floor_size: int = 0, floor_set: list[int] | None = None,
                 target: int | None = None):
        self.adj = adj
        self.budget = budget
        self.nodes = 0
        self.best_size = floor_size
        self.best_set = list(floor_set or [])
        self.target = target
        self.hit_target = False

    def run(self) -> None:
        full = (1 << len(self.adj)) - 1
        if full:
            self._expand([], full)

    def _expand(self, chosen: list[int], cand: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceBudgetError(
                f"matching search exceeded the {self.budget}-node budget",
                best_size=self.best_size, best_edges=tuple(self.best_set))
        if len(chosen) + _color_bound(cand, self.adj) <= self.best_size:
            return
        while cand:
            if len(chosen) + cand.bit_count() <= self.best_size:
                return
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            chosen.append(v)
            if len(chosen) > self.best_size:
                self.best_size = len(chosen)
                self.best_set = list(chosen)
                if self.target is not None and self.best_size >= self.target:
                    self.hit_target = True
                    return
            nxt = cand & self.adj[v]
            if nxt:
                self._expand(chosen, nxt)
                if self.hit_target:
                    return
            chosen.pop()


def _witness(h: Hypergraph, k: int, indices) -> MatchingWitness:
    return MatchingWitness(k, tuple(h.edges[idx] for idx in indices))


def _counting_cap(h: Hypergraph, k: int) -> int:
    # Members of a k-matching carry pairwise-distinct k-sets, C(r,k) each.
    return comb(h.n, k) // comb(h.r, k)


def greedy_maximal_k_matching(h: Hypergraph, k: int) -> MatchingWitness:
    """Scan edges in colex order, keeping each edge compatible with all
    kept so far. The result is inclusion-maximal: every remaining edge
    meets some member in >= k vertices."""
    if not 1 <= k <= h.r:
        raise ParameterError(f"need 1 <= k <= r = {h.r}, got k={k}")
    kept: list[int] = []
    kept_masks: list[int] = []
    for idx, e in enumerate(h.edge_masks):
        if all((e & f).bit_count() < k for f in kept_masks):
            kept.append(idx)
            kept_masks.append(e)
    return _witness(h, k, kept)


def nu_k(h: Hypergraph, k: int,
         budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, MatchingWitness]:
    """Exact k-matching number with an optimal witness.

    For k = r every pair of distinct edges is compatible, so the answer is
    the edge count. Exceeding the node budget raises ResourceBudgetError
    carrying the best lower bound found, never a silent underestimate.
    """
    if not 1 <= k <= h.r:
        raise ParameterError(f"need 1 <= k <= r = {h.r}, got k={k}")
    if not h.edge_masks:
        return 0, MatchingWitness(k, ())
    if k == h.r:
        return len(h.edge_masks), _witness(h, k, range(len(h.edge_masks)))
    seed = greedy_maximal_k_matching(h, k)
    seed_idx = [h.edge_masks.index(e.mask) for e in seed.edges]
    cap = _counting_cap(h, k)
    if len(seed_idx) >= cap:
        return len(seed_idx), seed
    search = _CliqueSearch(_compat_adj(h.edge_masks, k), budget,
                           floor_size=len(seed_idx), floor_set=seed_idx,
                           target=cap)
    search.run()
    return search.best_size, _witness(h, k, search.best_set)


def has_k_matching_of_size(h: Hypergraph, k: int, a: int,
                           budget: int = DEFAULT_NODE_BUDGET) -> MatchingWitness | None:
    """A k-matching with exactly ``a`` members if one exists, else None.

    Decision search: exits on the first witness. A budget overrun raises
    ResourceBudgetError, which is distinct from a definite None.
    """
    if not 1 <= k <= h.r:
        raise ParameterError(f"need 1 <= k <= r = {h.r}, got k={k}")
    if a < 0:
        raise ParameterError(f"need a >= 0, got a={a}")
    if a == 0:
        return MatchingWitness(k, ())
    if a > len(h.edge_masks) or a > _counting_cap(h, k):
        return None
    if k == h.r:
        return _witness(h, k, range(a))
    seed = greedy_maximal_k_matching(h, k)
    if len(seed.edges) >= a:
        return MatchingWitness(k, seed.edges[:a])
    search = _CliqueSearch(_compat_adj(h.edge_masks, k), budget,
                           floor_size=a - 1, floor_set=[], target=a)
    search.run()
    if search.hit_target:
        return _witness(h, k, search.best_set)
    return None
