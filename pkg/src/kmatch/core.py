"""Bitset vertex sets, uniform hypergraphs, binomials and subset machinery.

Vertices are 0-based integers internally; the JSON file format and the CLI
speak 1-based labels. A set of vertices is stored as an integer bitmask,
and numeric order on masks coincides with colexicographic order on the
sets themselves, so one comparison convention serves everywhere ties need
breaking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import IO, Iterable, Iterator

from .errors import DEFAULT_ENUM_BUDGET, ParameterError, ResourceBudgetError

# Fixed bitset capacity: two machine words of headroom over the n <= ~30
# desk-scale experiments this library targets.
CAPACITY = 128


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when k > n."""
    if n < 0 or k < 0:
        raise ParameterError(f"binomial arguments must be nonnegative, got ({n}, {k})")
    return comb(n, k)


class VertexSet:
    """Immutable set of vertices from [0, 128), backed by an int bitmask.

    Ordering compares masks numerically, which is exactly colexicographic
    order on the sets: the larger set in colex order is the one owning the
    largest vertex of the symmetric difference.
    """

    __slots__ = ("mask",)

    def __init__(self, vertices: Iterable[int] = ()):
        mask = 0
        for v in vertices:
            if not 0 <= v < CAPACITY:
                raise ParameterError(f"vertex {v} outside capacity [0, {CAPACITY})")
            mask |= 1 << v
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        if mask < 0 or mask >> CAPACITY:
            raise ParameterError("bitmask outside the 128-vertex capacity")
        vs = object.__new__(cls)
        object.__setattr__(vs, "mask", mask)
        return vs

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < CAPACITY and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexSet) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __lt__(self, other: "VertexSet") -> bool:
        return self.mask < other.mask

    def __le__(self, other: "VertexSet") -> bool:
        return self.mask <= other.mask

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & other.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask | other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & ~other.mask)

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.mask & other.mask == 0

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"


class Hypergraph:
    """r-uniform hypergraph on vertex set [0, n) in canonical form.

    Canonical form: edges deduplicated and sorted in colexicographic
    (= bitmask) order. Instances are immutable and hashable; the raw mask
    tuple is exposed as ``edge_masks`` for hot loops.
    """

    __slots__ = ("n", "r", "edges", "edge_masks")

    def __init__(self, n: int, r: int, edges: Iterable[VertexSet] = ()):
        if not 0 <= n <= CAPACITY:
            raise ParameterError(f"vertex count must lie in [0, {CAPACITY}], got {n}")
        if not 0 <= r <= n:
            raise ParameterError(f"uniformity must lie in [0, n]={n}, got {r}")
        masks = sorted({e.mask for e in edges})
        full = (1 << n) - 1
        for m in masks:
            if m.bit_count() != r:
                raise ParameterError(
                    f"edge {sorted(VertexSet.from_mask(m))} has cardinality "
                    f"{m.bit_count()}, expected {r}")
            if m & ~full:
                raise ParameterError(
                    f"edge {sorted(VertexSet.from_mask(m))} uses vertices outside [0, {n})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "edge_masks", tuple(masks))
        object.__setattr__(self, "edges", tuple(VertexSet.from_mask(m) for m in masks))

    @classmethod
    def from_masks(cls, n: int, r: int, masks: Iterable[int]) -> "Hypergraph":
        return cls(n, r, [VertexSet.from_mask(m) for m in masks])

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    def __len__(self) -> int:
        return len(self.edge_masks)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Hypergraph)
                and (self.n, self.r, self.edge_masks) == (other.n, other.r, other.edge_masks))

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.edge_masks))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, edges={len(self.edge_masks)})"


@dataclass(frozen=True)
class Params:
    """Parameter tuple (n, r, k, a, i) with the shared validity invariants.

    ``n0`` is the vertex count of the clique-type candidate,
    r*a - (a-1)*(k-1) - 1.
    """

    n: int
    r: int
    k: int
    a: int
    i: int = 0

    def __post_init__(self):
        if not 1 <= self.k <= self.r:
            raise ParameterError(f"need 1 <= k <= r, got k={self.k}, r={self.r}")
        if not self.r <= self.n <= CAPACITY:
            raise ParameterError(f"need r <= n <= {CAPACITY}, got r={self.r}, n={self.n}")
        if self.a < 1:
            raise ParameterError(f"need a >= 1, got a={self.a}")
        if self.i < 0:
            raise ParameterError(f"need i >= 0, got i={self.i}")

    @property
    def n0(self) -> int:
        return self.r * self.a - (self.a - 1) * (self.k - 1) - 1

    @property
    def block_size(self) -> int:
        return self.k + 2 * self.i

    def require_blocks(self) -> None:
        """Check that a-1 disjoint (k+2i)-blocks fit and i is in range."""
        if self.a < 2:
            raise ParameterError("block constructions need a >= 2")
        if 2 * self.i > self.n // (self.a - 1) - self.k:
            raise ParameterError(
                f"i={self.i} exceeds (floor(n/(a-1)) - k)/2 for n={self.n}, "
                f"k={self.k}, a={self.a}")
        if self.block_size * (self.a - 1) > self.n:
            raise ParameterError(
                f"{self.a - 1} disjoint blocks of size {self.block_size} do not fit in [{self.n}]")


def iter_subset_masks(n: int, r: int) -> Iterator[int]:
    """All r-subset bitmasks of [0, n) in increasing (= colex) order.

    Gosper's hack: numeric successor among masks of equal popcount.
    """
    if not 0 <= r <= n <= CAPACITY:
        raise ParameterError(f"need 0 <= r <= n <= {CAPACITY}, got r={r}, n={n}")
    if r == 0:
        yield 0
        return
    mask = (1 << r) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        c = mask & -mask
        up = mask + c
        mask = (((up ^ mask) >> 2) // c) | up


def enumerate_r_subsets(n: int, r: int) -> Iterator[VertexSet]:
    """All C(n, r) r-subsets of [0, n), each exactly once, in colex order."""
    for mask in iter_subset_masks(n, r):
        yield VertexSet.from_mask(mask)


def colex_rank(vertices: VertexSet | Iterable[int]) -> int:
    """Position of a set in the colex enumeration of same-size subsets."""
    members = sorted(vertices)
    return sum(comb(v, j + 1) for j, v in enumerate(members))


def colex_unrank(rank: int, r: int) -> VertexSet:
    """Inverse of colex_rank: the r-set at the given colex position."""
    if rank < 0 or r < 0:
        raise ParameterError("rank and cardinality must be nonnegative")
    out = []
    for j in range(r, 0, -1):
        v = j - 1
        while comb(v + 1, j) <= rank:
            v += 1
        rank -= comb(v, j)
        out.append(v)
    return VertexSet(out)


def require_enumerable(n: int, r: int, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Guard full C(n, r) walks against the enumeration budget."""
    total = binomial(n, r)
    if total > budget:
        raise ResourceBudgetError(
            f"C({n},{r}) = {total} exceeds the enumeration budget {budget}")
    return total


def degree(h: Hypergraph, t: VertexSet) -> int:
    """Number of edges of ``h`` containing the set ``t``."""
    if len(t) > h.r:
        raise ParameterError(f"|T| = {len(t)} exceeds uniformity r = {h.r}")
    tm = t.mask
    return sum(1 for e in h.edge_masks if e & tm == tm)


def max_degree_kset(h: Hypergraph, k: int) -> tuple[VertexSet, int]:
    """A k-set of maximum degree, ties broken toward the colex-least set.

    Only k-sets inside at least one edge can have positive degree, so the
    scan is restricted to those; an empty hypergraph has no such k-set.
    """
    if not 1 <= k <= h.r:
        raise ParameterError(f"need 1 <= k <= r = {h.r}, got k={k}")
    if not h.edge_masks:
        raise ParameterError("empty hypergraph: no k-set lies within any edge")
    counts: dict[int, int] = {}
    for e in h.edge_masks:
        members = list(VertexSet.from_mask(e))
        for sub in iter_subset_masks(len(members), k):
            tm = 0
            mm = sub
            while mm:
                low = mm & -mm
                tm |= 1 << members[low.bit_length() - 1]
                mm ^= low
            counts[tm] = counts.get(tm, 0) + 1
    best_mask, best_deg = None, -1
    for tm in sorted(counts):
        if counts[tm] > best_deg:
            best_mask, best_deg = tm, counts[tm]
    return VertexSet.from_mask(best_mask), best_deg


def link(h: Hypergraph, t: VertexSet) -> Hypergraph:
    """The family {E \\ T : T subset of E}, an (r-|T|)-uniform hypergraph
    on the same vertex universe."""
    if len(t) > h.r:
        raise ParameterError(f"|T| = {len(t)} exceeds uniformity r = {h.r}")
    tm = t.mask
    return Hypergraph.from_masks(
        h.n, h.r - len(t), [e & ~tm for e in h.edge_masks if e & tm == tm])


def delete(h: Hypergraph, t: VertexSet) -> Hypergraph:
    """The subhypergraph of edges not containing ``t``."""
    tm = t.mask
    return Hypergraph.from_masks(
        h.n, h.r, [e for e in h.edge_masks if e & tm != tm])


# ---------------------------------------------------------------------------
# JSON hypergraph file format: {"n": int, "r": int, "edges": [[int, ...]]}
# with 1-based strictly increasing vertex lists and edges in colex order.
# ---------------------------------------------------------------------------

def hypergraph_to_dict(h: Hypergraph) -> dict:
    return {
        "n": h.n,
        "r": h.r,
        "edges": [[v + 1 for v in e] for e in h.edges],
    }


def hypergraph_from_dict(obj: dict) -> Hypergraph:
    if not isinstance(obj, dict):
        raise ParameterError("hypergraph document must be a JSON object")
    for key in ("n", "r", "edges"):
        if key not in obj:
            raise ParameterError(f"hypergraph document missing key {key!r}")
    n, r, edges = obj["n"], obj["r"], obj["edges"]
    if not isinstance(n, int) or not isinstance(r, int) or isinstance(n, bool) or isinstance(r, bool):
        raise ParameterError("n and r must be integers")
    if not isinstance(edges, list):
        raise ParameterError("edges must be a list of vertex lists")
    seen = set()
    parsed = []
    for pos, edge in enumerate(edges):
        if not isinstance(edge, list) or not all(
                isinstance(v, int) and not isinstance(v, bool) for v in edge):
            raise ParameterError(f"edge #{pos} is not a list of integers")
        if len(edge) != r:
            raise ParameterError(f"edge #{pos} has {len(edge)} vertices, expected r={r}")
        if any(not 1 <= v <= n for v in edge):
            raise ParameterError(f"edge #{pos} has vertices outside [1, {n}]")
        if any(edge[j] >= edge[j + 1] for j in range(len(edge) - 1)):
            raise ParameterError(f"edge #{pos} is not strictly increasing")
        key = frozenset(edge)
        if key in seen:
            raise ParameterError(f"duplicate edge at position {pos}: {edge}")
        seen.add(key)
        parsed.append(VertexSet(v - 1 for v in edge))
    return Hypergraph(n, r, parsed)


def read_hypergraph(fp: IO[str] | str) -> Hypergraph:
    """Load a hypergraph from a JSON file path or open text stream."""
    if isinstance(fp, str):
        with open(fp, "r", encoding="utf-8") as fh:
            return hypergraph_from_dict(json.load(fh))
    return hypergraph_from_dict(json.load(fp))


def write_hypergraph(h: Hypergraph, fp: IO[str] | str) -> None:
    """Write the canonical JSON form (1-based labels, colex edge order)."""
    doc = json.dumps(hypergraph_to_dict(h), indent=2) + "\n"
    if isinstance(fp, str):
        with open(fp, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        fp.write(doc)
