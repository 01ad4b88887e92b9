"""Exact extremal-number search and candidate-bound evaluation.

m(n, r, k, a) is the maximum edge count of an r-uniform hypergraph on [n]
whose k-matching number stays below a. The candidate bound is the larger
of the clique-type value C(n0, r) and the disjoint-block family sizes; the
search is a branch-and-bound over inclusion of r-sets in colex order,
pruning the moment an inserted edge completes a k-matching of size a
(feasibility is hereditary, so violations surface exactly at insertion).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from math import comb

from .constructions import complete_hypergraph, frankl_family
from .core import Hypergraph, Params, binomial, iter_subset_masks
from .counting import frankl_size, g_count
from .errors import (DEFAULT_ENUM_BUDGET, DEFAULT_NODE_BUDGET,
                     DEFAULT_UNIVERSE_CAP, ParameterError, ResourceBudgetError)
from .matching import has_k_matching_of_size, nu_k
from .shifting import is_stable


@dataclass(frozen=True)
class CandidateReport:
    """One conjectured extremal candidate: its size, its exact k-matching
    number when the solver budget allowed, and whether it is feasible
    (nu_k < a). nu None means not evaluated."""

    name: str
    size: int
    nu: int | None
    feasible: bool | None


@dataclass(frozen=True)
class ConjectureReport:
    """Candidate table plus, when the exact search completed, the true
    extremal number and its witness.

    paper_max is the literal candidate maximum (all candidates, feasible
    or not); feasible_max restricts to candidates whose k-matching number
    was verified to stay below a. agreement is "match" / "mismatch"
    against paper_max, or "exact-unavailable" when the search was skipped
    or ran out of budget.
    """

    params: Params
    candidates: tuple[CandidateReport, ...]
    paper_max: int
    feasible_max: int | None
    exact_value: int | None = None
    witness: Hypergraph | None = None
    agreement: str = "exact-unavailable"
    matches_paper_max: bool | None = None
    matches_feasible_max: bool | None = None


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    lhs: int
    rhs: int
    holds: bool

    @property
    def margin(self) -> int:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class LargeNReport:
    """Exact-arithmetic evaluation of the three large-n proof inequalities."""

    n: int
    r: int
    k: int
    a: int
    threshold: int
    at_or_above_threshold: bool
    checks: tuple[InequalityCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)


def large_n_threshold(r: int, k: int, a: int) -> int:
    """The vertex-count threshold 4 * r * C(r,k)^2 * a."""
    if not 1 <= k < r:
        raise ParameterError(f"need 1 <= k < r, got k={k}, r={r}")
    if a < 2:
        raise ParameterError(f"need a >= 2, got a={a}")
    return 4 * r * comb(r, k) ** 2 * a


def verify_large_n_inequalities(r: int, k: int, a: int, n: int) -> LargeNReport:
    """Evaluate the three estimates used at large n, exactly.

    1. g(n,r,k,a) >= (a-1) * C(n-(a-1)k, r-k): sets containing exactly one
       block and avoiding the rest are pairwise distinct.
    2. C(n-(a-1)k, r-k) >= (a-1) * C(r,k)^2 * C(n-k-1, r-k-1): the binomial
       gap that powers the degree argument; expected from the threshold up.
    3. 1 + g(n,r,k,a) > (a-1)^2 * C(r,k)^2 * C(n-k-1, r-k-1): a max-degree
       k-set then beats the count of r-sets meeting any k-set of an
       (a-1)-member matching; follows from 1 and 2.
    """
    if not 1 <= k < r:
        raise ParameterError(f"need 1 <= k < r, got k={k}, r={r}")
    if a < 2:
        raise ParameterError(f"need a >= 2, got a={a}")
    if n < (a - 1) * k + r:
        raise ParameterError(
            f"need n >= (a-1)k + r = {(a - 1) * k + r}, got n={n}")
    g = g_count(n, r, k, a)
    rk2 = comb(r, k) ** 2
    checks = (
        InequalityCheck("g_lower_bound",
                        g, (a - 1) * comb(n - (a - 1) * k, r - k),
                        g >= (a - 1) * comb(n - (a - 1) * k, r - k)),
        InequalityCheck("binomial_gap",
                        comb(n - (a - 1) * k, r - k),
                        (a - 1) * rk2 * comb(n - k - 1, r - k - 1),
                        comb(n - (a - 1) * k, r - k)
                        >= (a - 1) * rk2 * comb(n - k - 1, r - k - 1)),
        InequalityCheck("degree_crosscheck",
                        1 + g, (a - 1) ** 2 * rk2 * comb(n - k - 1, r - k - 1),
                        1 + g > (a - 1) ** 2 * rk2 * comb(n - k - 1, r - k - 1)),
    )
    threshold = large_n_threshold(r, k, a)
    return LargeNReport(n=n, r=r, k=k, a=a, threshold=threshold,
                          at_or_above_threshold=n >= threshold, checks=checks)


def _has_completing_matching(rows: list[int], cand: int, need: int) -> bool:
    """Clique of the given size inside the chosen-edge compatibility rows."""
    if need == 0:
        return True
    while cand:
        if cand.bit_count() < need:
            return False
        low = cand & -cand
        cand ^= low
        if _has_completing_matching(rows, cand & rows[low.bit_length() - 1], need - 1):
            return True
    return False


def extremal_number(p: Params, budget: int = DEFAULT_NODE_BUDGET,
                    universe_cap: int = DEFAULT_UNIVERSE_CAP,
                    stable_only: bool = False) -> tuple[int, Hypergraph]:
    """Exhaustive maximum edge count subject to nu_k < a, with a witness.

    Branches over inclusion of the C(n, r) universe in colex order; adding
    an edge is pruned when a-1 pairwise-compatible chosen edges are all
    compatible with it (any size-a matching in the extended family must use
    the newest edge). stable_only restricts incumbents to shift-stable
    families, which empirically preserves the optimal value.
    """
    n, r, k, a = p.n, p.r, p.k, p.a
    if a == 1:
        return 0, Hypergraph(n, r, ())
    universe = list(iter_subset_masks(n, r))
    if len(universe) > universe_cap:
        raise ResourceBudgetError(
            f"universe C({n},{r}) = {len(universe)} exceeds the cap "
            f"{universe_cap}; raise it to search anyway")
    # recursion walks one level per universe element
    if sys.getrecursionlimit() < len(universe) + 200:
        sys.setrecursionlimit(len(universe) + 200)
    need = a - 1  # chosen edges that would complete a size-a matching
    best_size = 0
    best_edges: list[int] = []
    chosen: list[int] = []
    rows: list[int] = []  # compatibility bitmasks among chosen edges
    nodes = 0

    def accept(edges: list[int]) -> bool:
        if not stable_only:
            return True
        return is_stable(Hypergraph.from_masks(n, r, edges))

    def extend(idx: int) -> None:
        nonlocal best_size, best_edges, nodes
        nodes += 1
        if nodes > budget:
            raise ResourceBudgetError(
                f"extremal search exceeded the {budget}-node budget; best "
                f"feasible family found has {best_size} edges (non-optimal)",
                best_size=best_size, best_edges=tuple(best_edges))
        if len(chosen) + (len(universe) - idx) <= best_size:
            return
        if idx == len(universe):
            return
        e = universe[idx]
        row = 0
        for pos, f in enumerate(chosen):
            if (e & f).bit_count() < k:
                row |= 1 << pos
        if not _has_completing_matching(rows, row, need):
            pos = len(chosen)
            chosen.append(e)
            rows.append(row)
            undo = row
            while undo:
                low = undo & -undo
                undo ^= low
                rows[low.bit_length() - 1] |= 1 << pos
            if len(chosen) > best_size and accept(chosen):
                best_size = len(chosen)
                best_edges = list(chosen)
            extend(idx + 1)
            chosen.pop()
            rows.pop()
            while row:
                low = row & -row
                row ^= low
                rows[low.bit_length() - 1] &= ~(1 << pos)
        extend(idx + 1)

    extend(0)
    witness = Hypergraph.from_masks(n, r, best_edges)
    # The optimum must itself verify as feasible; this is a cheap audit.
    if has_k_matching_of_size(witness, k, a, budget) is not None:
        raise AssertionError("extremal witness failed the feasibility audit")
    return best_size, witness


def _candidate_nu(h: Hypergraph, k: int, budget: int) -> int | None:
    try:
        value, _ = nu_k(h, k, budget)
        return value
    except ResourceBudgetError:
        return None


# Largest candidate family the solver is asked to evaluate; the
# compatibility adjacency is quadratic in the edge count.
SOLVER_EDGE_CAP = 2000


def conjecture_value(p: Params, solver_budget: int = DEFAULT_NODE_BUDGET,
                     enum_budget: int = DEFAULT_ENUM_BUDGET) -> ConjectureReport:
    """Evaluate every conjectured candidate for (n, r, k, a).

    Candidates: the clique-type value C(n0, r) and the disjoint-block
    family size for each i with 0 <= 2i <= floor(n/(a-1)) - k. Each
    candidate's k-matching number is computed when materialization and the
    solver budget allow, and feasibility (nu_k < a) is recorded rather
    than assumed.
    """
    n, r, k, a = p.n, p.r, p.k, p.a
    if a < 2 or k >= r:
        raise ParameterError(f"need a >= 2 and k < r, got a={a}, k={k}, r={r}")
    if n < r * a:
        raise ParameterError(f"need n >= r*a = {r * a}, got n={n}")
    candidates = []
    n0 = p.n0
    h0_size = binomial(n0, r)
    h0_nu = None
    if h0_size <= SOLVER_EDGE_CAP and binomial(n0, r) <= enum_budget:
        h0_nu = _candidate_nu(complete_hypergraph(n0, r), k, solver_budget)
    candidates.append(CandidateReport(
        "h0", h0_size, h0_nu, None if h0_nu is None else h0_nu < a))
    i_max = (n // (a - 1) - k) // 2
    for i in range(i_max + 1):
        size = frankl_size(n, r, k, a, i)
        if k + i > r:
            # Capture is impossible: the family is empty and trivially feasible.
            candidates.append(CandidateReport(f"frankl_{i}", size, 0, True))
            continue
        nu = None
        if size <= SOLVER_EDGE_CAP and binomial(n, r) <= enum_budget:
            fam = frankl_family(Params(n, r, k, a, i))
            nu = _candidate_nu(fam, k, solver_budget)
        candidates.append(CandidateReport(
            f"frankl_{i}", size, nu, None if nu is None else nu < a))
    paper_max = max(c.size for c in candidates)
    feasible_sizes = [c.size for c in candidates if c.feasible]
    feasible_max = max(feasible_sizes) if feasible_sizes else None
    return ConjectureReport(params=p, candidates=tuple(candidates),
                            paper_max=paper_max, feasible_max=feasible_max)


def check_conjecture(p: Params, budget: int = DEFAULT_NODE_BUDGET,
                     universe_cap: int = DEFAULT_UNIVERSE_CAP,
                     solver_budget: int = DEFAULT_NODE_BUDGET) -> ConjectureReport:
    """Join the candidate table with the exact search when affordable.

    A budget overrun in the search leaves agreement = "exact-unavailable";
    the candidate table is still authoritative for what it reports.
    """
    report = conjecture_value(p, solver_budget=solver_budget)
    try:
        exact, witness = extremal_number(p, budget=budget, universe_cap=universe_cap)
    except ResourceBudgetError:
        return report
    agreement = "match" if exact == report.paper_max else "mismatch"
    return ConjectureReport(
        params=report.params, candidates=report.candidates,
        paper_max=report.paper_max, feasible_max=report.feasible_max,
        exact_value=exact, witness=witness, agreement=agreement,
        matches_paper_max=exact == report.paper_max,
        matches_feasible_max=(None if report.feasible_max is None
                              else exact == report.feasible_max))
