"""Capture events and the swap injection behind block disjointification.

An r-set I captures a block family when it meets some block in >= k+i
vertices. Replacing the overlap S of an intersecting pair by fresh
vertices R (through a bijection phi) never loses captures: the swap map
sends each "captured before, not after" r-set injectively to a "captured
after, not before" one. Counting over the uniform r-set universe makes the
comparison exact, no probability arithmetic required.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .constructions import KSetFamily
from .core import VertexSet, iter_subset_masks, require_enumerable
from .counting import count_cover_oracle
from .errors import DEFAULT_ENUM_BUDGET, ParameterError


@dataclass(frozen=True)
class CouplingContext:
    """One disjointification step: replace overlap S of (T1, T2) by R.

    phi pairs the vertices of S with those of R, and star_family is the
    input family with T1 rewritten to (T1 minus S) union R.
    """

    family: KSetFamily
    star_family: KSetFamily
    replaced: VertexSet      # T1, the member being rewritten
    partner: VertexSet       # T2, the member it intersects
    overlap: VertexSet       # S = T1 & T2
    replacement: VertexSet   # R, fresh vertices outside every member
    phi: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.overlap) != len(self.replacement):
            raise ParameterError("|S| must equal |R|")
        union = 0
        for s in self.family.sets:
            union |= s.mask
        if self.replacement.mask & union:
            raise ParameterError("replacement vertices must avoid every member set")
        if ({p for p, _ in self.phi} != set(self.overlap)
                or {q for _, q in self.phi} != set(self.replacement)):
            raise ParameterError("phi must be a bijection from S onto R")


@dataclass(frozen=True)
class CouplingReport:
    """Exact counts over the r-set universe for one disjointification step.

    ``injective`` records that the swap map carried every "captures the
    original family only" r-set to a distinct "captures the rewritten
    family only" r-set.
    """

    count_a1: int
    count_a2: int
    count_both: int
    injective: bool
    size_t: int
    size_t_star: int


def captures(i_set: VertexSet, family: KSetFamily, k: int, i: int) -> bool:
    """Whether some member block meets ``i_set`` in >= k+i vertices."""
    if family.cardinality != k + 2 * i:
        raise ParameterError(
            f"member cardinality {family.cardinality} != k + 2i = {k + 2 * i}")
    need = k + i
    im = i_set.mask
    return any((im & s.mask).bit_count() >= need for s in family.sets)


def _derive_i(family: KSetFamily, k: int, i: int | None) -> int:
    if i is None:
        if (family.cardinality - k) % 2:
            raise ParameterError(
                f"member cardinality {family.cardinality} is not k + 2i for k={k}")
        i = (family.cardinality - k) // 2
    if i < 0 or family.cardinality != k + 2 * i:
        raise ParameterError(
            f"member cardinality {family.cardinality} != k + 2i = {k + 2 * i}")
    return i


def disjointify_step(family: KSetFamily, n: int, seed: int = 0,
                     randomize: bool = False) -> CouplingContext | None:
    """One overlap-removal step, or None when already pairwise disjoint.

    Deterministic rule: scan the colex-sorted members for the first
    intersecting pair, rewrite its colex-least set, take the lowest-indexed
    free vertices as R and match S to R in ascending order. The randomized
    mode (seeded) picks pair, replacement vertices and bijection at random,
    for probing that the monotonicity conclusion does not hinge on the
    deterministic choices.
    """
    if family.n != n:
        raise ParameterError(f"family lives on [{family.n}], expected [{n}]")
    sets = family.sets
    pairs = [(p, q) for p in range(len(sets)) for q in range(p + 1, len(sets))
             if sets[p].mask & sets[q].mask]
    if not pairs:
        return None
    rng = random.Random(seed) if randomize else None
    p, q = rng.choice(pairs) if rng else pairs[0]
    t1, t2 = sets[p], sets[q]
    overlap = t1 & t2
    union = 0
    for s in sets:
        union |= s.mask
    free = [v for v in range(n) if not union >> v & 1]
    if len(free) < len(overlap):
        raise ParameterError(
            f"need {len(overlap)} free vertices outside the member union, "
            f"only {len(free)} available")
    if rng:
        repl = sorted(rng.sample(free, len(overlap)))
        targets = list(repl)
        rng.shuffle(targets)
    else:
        repl = free[:len(overlap)]
        targets = list(repl)
    replacement = VertexSet(repl)
    phi = tuple(zip(sorted(overlap), targets))
    t1_star = (t1 - overlap) | replacement
    star_sets = list(sets)
    star_sets[p] = t1_star
    return CouplingContext(
        family=family,
        star_family=KSetFamily(n, tuple(star_sets)),
        replaced=t1, partner=t2, overlap=overlap,
        replacement=replacement, phi=phi)


def coupling_map(i_set: VertexSet, ctx: CouplingContext) -> VertexSet:
    """Swap the S-part and R-part of an r-set through phi; an involution
    that preserves cardinality."""
    fwd = dict(ctx.phi)
    rev = {q: p for p, q in ctx.phi}
    keep = i_set.mask & ~(ctx.overlap.mask | ctx.replacement.mask)
    out = keep
    for v in i_set:
        if v in fwd:
            out |= 1 << fwd[v]
        elif v in rev:
            out |= 1 << rev[v]
    return VertexSet.from_mask(out)


def verify_coupling(family: KSetFamily, n: int, r: int, k: int,
                    i: int | None = None, seed: int = 0, randomize: bool = False,
                    budget: int = DEFAULT_ENUM_BUDGET) -> CouplingReport:
    """Enumerate every r-set, classify capture-before/after, and check the
    swap map lands injectively inside the capture-after-only class.

    An already-disjoint family compares against itself: both one-sided
    classes are empty and the check passes degenerately.
    """
    i = _derive_i(family, k, i)
    require_enumerable(n, r, budget)
    ctx = disjointify_step(family, n, seed=seed, randomize=randomize)
    if ctx is None:
        size = count_cover_oracle(n, r, k, i, family, budget)
        return CouplingReport(0, 0, size, True, size, size)
    star = ctx.star_family
    count_a1 = count_a2 = count_both = 0
    a1_masks = []
    for m in iter_subset_masks(n, r):
        vs = VertexSet.from_mask(m)
        cap_t = captures(vs, family, k, i)
        cap_star = captures(vs, star, k, i)
        if cap_t and cap_star:
            count_both += 1
        elif cap_t:
            count_a1 += 1
            a1_masks.append(m)
        elif cap_star:
            count_a2 += 1
    images = set()
    injective = True
    for m in a1_masks:
        j = coupling_map(VertexSet.from_mask(m), ctx)
        if not captures(j, star, k, i) or captures(j, family, k, i):
            injective = False
            break
        if j.mask in images:
            injective = False
            break
        images.add(j.mask)
    return CouplingReport(
        count_a1=count_a1, count_a2=count_a2, count_both=count_both,
        injective=injective,
        size_t=count_both + count_a1, size_t_star=count_both + count_a2)


def disjointify(family: KSetFamily, n: int, r: int, k: int,
                i: int | None = None, seed: int = 0, randomize: bool = False,
                budget: int = DEFAULT_ENUM_BUDGET) -> tuple[KSetFamily, list[int]]:
    """Iterate overlap removal to a pairwise disjoint family.

    Returns the final family and the trace of capture counts after each
    step (first entry is the input family's count); the trace is expected
    to be non-decreasing, ending at the disjoint-block count.
    """
    i = _derive_i(family, k, i)
    if family.cardinality * len(family.sets) > n:
        raise ParameterError(
            f"{len(family.sets)} disjoint sets of size {family.cardinality} "
            f"cannot fit in [{n}]")
    trace = [count_cover_oracle(n, r, k, i, family, budget)]
    step = 0
    while True:
        ctx = disjointify_step(family, n, seed=seed + step, randomize=randomize)
        if ctx is None:
            return family, trace
        family = ctx.star_family
        trace.append(count_cover_oracle(n, r, k, i, family, budget))
        step += 1
