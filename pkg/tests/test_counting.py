from math import comb

import pytest

from kmatch.constructions import KSetFamily, frankl_family
from kmatch.core import Params, VertexSet
from kmatch.counting import (b_family_size, count_cover_oracle, family_size,
                             frankl_size, g_count, g_recurrence_check,
                             g_recurrence_gap)
from kmatch.errors import ParameterError, ResourceBudgetError

from oracles import cover_count


def blocks(n, k, a):
    return KSetFamily(n, tuple(VertexSet(range(j * k, (j + 1) * k))
                               for j in range(a - 1)))


def test_g_examples():
    assert g_count(9, 3, 2, 2) == 7
    assert g_count(7, 3, 1, 3) == 25
    assert g_count(8, 4, 2, 3) == 29
    assert g_count(9, 3, 2, 3) == 14


def test_g_parameter_errors():
    with pytest.raises(ParameterError):
        g_count(9, 3, 2, 1)
    with pytest.raises(ParameterError):
        g_count(3, 3, 2, 3)  # blocks do not fit


def test_g_single_block_collapse():
    for n in range(3, 12):
        for r in range(1, min(5, n) + 1):
            for k in range(1, r + 1):
                assert g_count(n, r, k, 2) == comb(n - k, r - k)


def test_g_matches_enumeration_oracle():
    for n in range(2, 11):
        for r in range(1, min(4, n) + 1):
            for k in range(1, r):
                for a in (2, 3, 4):
                    if (a - 1) * k <= n:
                        ref = cover_count(
                            n, r, k,
                            [range(j * k, (j + 1) * k) for j in range(a - 1)])
                        assert g_count(n, r, k, a) == ref, (n, r, k, a)


def test_g_monotone_in_n_and_a():
    for r in (2, 3, 4):
        for k in range(1, r):
            for a in (2, 3, 4):
                for n in range(max(r, (a - 1) * k), 20):
                    g = g_count(n, r, k, a)
                    assert g_count(n + 1, r, k, a) >= g
                    if n >= a * k:
                        assert g_count(n, r, k, a + 1) >= g


def test_count_cover_oracle_overlapping_blocks():
    fam = KSetFamily(5, (VertexSet([0, 1]), VertexSet([1, 2])))
    assert count_cover_oracle(5, 3, 2, 0, fam) == 5


def test_count_cover_oracle_budget():
    fam = KSetFamily(40, (VertexSet([0, 1]),))
    with pytest.raises(ResourceBudgetError):
        count_cover_oracle(40, 12, 2, 0, fam, budget=10**4)


def test_recurrence_identity_true_iff_r_below_2k():
    # Dropping one block removes exactly C(n-k, r-k) edges only when no
    # r-set can contain two disjoint k-blocks; with r >= 2k the overlap
    # correction is strictly positive.
    assert g_recurrence_check(9, 3, 2, 3) is True
    assert g_count(9, 3, 2, 3) - comb(7, 1) == g_count(9, 3, 2, 2) == 7
    assert g_recurrence_check(7, 2, 1, 3) is False
    assert g_recurrence_gap(7, 2, 1, 3) == -1
    for n in range(6, 26):
        for r in range(2, 7):
            for k in range(1, r):
                for a in (3, 4, 5):
                    if n >= max(r, (a - 1) * k):
                        assert g_recurrence_check(n, r, k, a) == (r < 2 * k), \
                            (n, r, k, a)


def test_recurrence_gap_never_positive():
    # The exact relation is g(n,r,k,a) - C(n-k,r-k) <= g(n,r,k,a-1): the
    # dropped block's edges may also cover another block.
    for n in range(6, 30):
        for r in range(2, 7):
            for k in range(1, r):
                for a in (3, 4, 5):
                    if n >= max(r, (a - 1) * k):
                        assert g_recurrence_gap(n, r, k, a) <= 0


def test_family_size():
    from kmatch.constructions import complete_hypergraph
    from kmatch.core import Hypergraph
    assert family_size(complete_hypergraph(5, 3)) == 10
    assert family_size(frankl_family(Params(9, 3, 2, 3, 0))) == 14
    assert family_size(Hypergraph(5, 3, [])) == 0


def test_b_family_size_against_enumeration():
    assert b_family_size(5, 3, 2, 1) == 4
    assert b_family_size(6, 3, 2, 1) == 4
    for n in range(3, 11):
        for r in range(1, min(5, n) + 1):
            for k in range(1, r + 1):
                for i in range(0, (n - k) // 2 + 1):
                    expect = cover_count(n, r, k + i, [range(k + 2 * i)])
                    assert b_family_size(n, r, k, i) == expect, (n, r, k, i)
    # i = 0 closed form
    for n in range(4, 12):
        for r in range(2, 5):
            for k in range(1, r):
                assert b_family_size(n, r, k, 0) == comb(n - k, r - k)


def test_frankl_size_closed_form_matches_enumeration():
    for n in range(4, 11):
        for r in range(2, min(4, n) + 1):
            for k in range(1, r):
                for a in (2, 3, 4):
                    i_top = (n // (a - 1) - k) // 2
                    for i in range(0, i_top + 1):
                        if (k + 2 * i) * (a - 1) > n:
                            continue
                        expect = cover_count(
                            n, r, k + i,
                            [range(j * (k + 2 * i), (j + 1) * (k + 2 * i))
                             for j in range(a - 1)])
                        assert frankl_size(n, r, k, a, i) == expect, (n, r, k, a, i)


def test_frankl_size_special_cases():
    for n in range(6, 12):
        for r in (2, 3):
            for k in range(1, r):
                assert frankl_size(n, r, k, 2, 1) == b_family_size(n, r, k, 1)
                assert frankl_size(n, r, k, 3, 0) == g_count(n, r, k, 3)
    assert frankl_size(5, 2, 1, 2, 2) == 0  # capture threshold above r


def test_materialized_frankl_matches_closed_form():
    for p in (Params(9, 3, 2, 3, 0), Params(9, 3, 2, 3, 1),
              Params(12, 4, 2, 3, 1), Params(10, 4, 3, 2, 0)):
        assert family_size(frankl_family(p)) == \
            frankl_size(p.n, p.r, p.k, p.a, p.i)
