"""Closed-form and brute-force counts for the candidate families.

Everything here is exact integer arithmetic; alternating sums keep signed
intermediates but every public count is nonnegative.
"""

from __future__ import annotations

from math import comb

from .constructions import KSetFamily
from .core import Hypergraph, iter_subset_masks, require_enumerable
from .errors import DEFAULT_ENUM_BUDGET, ParameterError


def _require_g_params(n: int, r: int, k: int, a: int) -> None:
    if a < 2:
        raise ParameterError(f"need a >= 2, got a={a}")
    if not 1 <= k <= r <= n:
        raise ParameterError(f"need 1 <= k <= r <= n, got k={k}, r={r}, n={n}")
    if n < (a - 1) * k:
        raise ParameterError(
            f"{a - 1} disjoint k-blocks need n >= {(a - 1) * k}, got n={n}")


def g_count(n: int, r: int, k: int, a: int) -> int:
    """Number of r-sets of [n] containing at least one of a-1 pairwise
    disjoint k-blocks, by inclusion-exclusion."""
    _require_g_params(n, r, k, a)
    top = min(a - 1, r // k)
    return sum((-1) ** (j - 1) * comb(a - 1, j) * comb(n - j * k, r - j * k)
               for j in range(1, top + 1))


def g_recurrence_gap(n: int, r: int, k: int, a: int) -> int:
    """g(n,r,k,a) - C(n-k, r-k) - g(n,r,k,a-1), signed."""
    if a < 3:
        raise ParameterError(f"need a >= 3, got a={a}")
    _require_g_params(n, r, k, a)
    return g_count(n, r, k, a) - comb(n - k, r - k) - g_count(n, r, k, a - 1)


def g_recurrence_check(n: int, r: int, k: int, a: int) -> bool:
    """Whether g(n,r,k,a) - C(n-k,r-k) equals g(n,r,k,a-1) exactly.

    Dropping one block from the union removes C(n-k, r-k) edges only when
    no r-set can contain two disjoint k-blocks, so this holds iff r < 2k
    (see g_recurrence_gap for the signed difference).
    """
    return g_recurrence_gap(n, r, k, a) == 0


def count_cover_oracle(n: int, r: int, k: int, i: int, family: KSetFamily,
                       budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Brute-force count of r-sets meeting some member of ``family`` in
    >= k+i vertices, by full enumeration of C([n], r)."""
    if family.n != n:
        raise ParameterError(f"family lives on [{family.n}], expected [{n}]")
    if family.cardinality != k + 2 * i:
        raise ParameterError(
            f"member cardinality {family.cardinality} != k + 2i = {k + 2 * i}")
    require_enumerable(n, r, budget)
    blocks = [s.mask for s in family.sets]
    need = k + i
    return sum(1 for m in iter_subset_masks(n, r)
               if any((m & b).bit_count() >= need for b in blocks))


def family_size(h: Hypergraph) -> int:
    """Edge count."""
    return len(h.edge_masks)


def b_family_size(n: int, r: int, k: int, i: int) -> int:
    """Closed form for the single-block family size: sum over t of
    C(k+2i, t) * C(n-k-2i, r-t) for k+i <= t <= min(r, k+2i).

    The enumeration of the family itself is the defining oracle; the test
    suite holds this formula to it.
    """
    if not 0 <= 2 * i <= n - k:
        raise ParameterError(f"need 0 <= i <= (n-k)/2, got i={i}, n={n}, k={k}")
    if not 1 <= k <= r <= n:
        raise ParameterError(f"need 1 <= k <= r <= n, got k={k}, r={r}, n={n}")
    size = k + 2 * i
    return sum(comb(size, t) * comb(n - size, r - t)
               for t in range(k + i, min(r, size) + 1))


def frankl_size(n: int, r: int, k: int, a: int, i: int) -> int:
    """Closed form for the disjoint-block family size, any i.

    Inclusion-exclusion over which blocks are met in >= k+i vertices; the
    count for s specified blocks is a coefficient-wise convolution of the
    per-block profile C(k+2i, t), t in [k+i, k+2i].
    """
    _require_g_params(n, r, k, a)
    size = k + 2 * i
    if i < 0:
        raise ParameterError(f"need i >= 0, got i={i}")
    if size * (a - 1) > n:
        raise ParameterError(
            f"{a - 1} disjoint blocks of size {size} do not fit in [{n}]")
    if k + i > r:
        return 0
    block = [0] * (size + 1)
    for t in range(k + i, size + 1):
        block[t] = comb(size, t)
    total = 0
    conv = [1]  # polynomial for s = 0 blocks
    for s in range(1, a):
        nxt = [0] * min(len(conv) + size, r + 1)
        for d1, c1 in enumerate(conv):
            if c1 == 0:
                continue
            for t in range(k + i, size + 1):
                if d1 + t <= r:
                    nxt[d1 + t] += c1 * block[t]
        conv = nxt
        n_rest = n - s * size
        n_s = sum(c * comb(n_rest, r - d) for d, c in enumerate(conv) if c)
        total += (-1) ** (s - 1) * comb(a - 1, s) * n_s
    return total
