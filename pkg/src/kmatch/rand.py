"""Seeded random instances for property sweeps and robustness probes.

All randomness flows from one integer seed; sub-streams derive by integer
arithmetic only (string hashing is process-randomized and would break
reproducibility across runs).
"""

from __future__ import annotations

import random
from math import comb

from .constructions import KSetFamily
from .core import Hypergraph, VertexSet, colex_unrank
from .errors import ParameterError


def spawn(seed: int, index: int) -> random.Random:
    """Independent deterministic sub-stream number ``index`` of ``seed``."""
    return random.Random(seed * 1_000_003 + index)


def random_hypergraph(rng: random.Random, n: int, r: int, m: int) -> Hypergraph:
    """Uniformly random set of m distinct r-edges, via colex unranking."""
    total = comb(n, r)
    if m > total:
        raise ParameterError(f"cannot pick {m} distinct edges from C({n},{r}) = {total}")
    ranks = rng.sample(range(total), m)
    return Hypergraph(n, r, [colex_unrank(t, r) for t in ranks])


def random_kset_family(rng: random.Random, n: int, cardinality: int,
                       count: int, ensure_overlap: bool = False) -> KSetFamily:
    """``count`` distinct cardinality-sets on [0, n); optionally forced to
    contain at least one intersecting pair."""
    total = comb(n, cardinality)
    if count > total:
        raise ParameterError(f"cannot pick {count} distinct sets from C({n},{cardinality})")
    if ensure_overlap and count < 2:
        raise ParameterError("an overlapping pair needs at least two sets")
    if ensure_overlap and cardinality < 2:
        raise ParameterError("distinct singleton sets can never intersect")
    for _ in range(200):
        ranks = rng.sample(range(total), count)
        sets = tuple(colex_unrank(t, cardinality) for t in ranks)
        family = KSetFamily(n, sets)
        if not ensure_overlap or not family.pairwise_disjoint():
            return family
    # Force an overlap: rebuild the last set around a vertex of the first.
    base = list(sets)
    anchor = next(iter(base[0]))
    rest = [v for v in range(n) if v != anchor]
    while True:
        cand = VertexSet([anchor] + rng.sample(rest, cardinality - 1))
        if all(cand.mask != s.mask for s in base[:-1]):
            base[-1] = cand
            return KSetFamily(n, tuple(base))
