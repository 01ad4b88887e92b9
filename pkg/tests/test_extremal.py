from math import comb

import pytest

from kmatch.constructions import complete_hypergraph
from kmatch.core import Hypergraph, Params
from kmatch.counting import b_family_size, g_count
from kmatch.errors import ParameterError, ResourceBudgetError
from kmatch.extremal import (check_conjecture, conjecture_value,
                             extremal_number, large_n_threshold,
                             verify_large_n_inequalities)
from kmatch.matching import has_k_matching_of_size, nu_k

from oracles import max_feasible_family_brute


def test_threshold_values():
    assert large_n_threshold(2, 1, 2) == 64
    assert large_n_threshold(3, 2, 2) == 216
    assert large_n_threshold(3, 1, 3) == 324
    with pytest.raises(ParameterError):
        large_n_threshold(3, 3, 2)
    with pytest.raises(ParameterError):
        large_n_threshold(3, 2, 1)


def test_inequalities_at_reference_points():
    for r, k, a in ((3, 2, 2), (2, 1, 2), (4, 2, 3)):
        n = large_n_threshold(r, k, a)
        report = verify_large_n_inequalities(r, k, a, n)
        assert report.at_or_above_threshold
        assert report.all_hold, [(c.name, c.lhs, c.rhs) for c in report.checks]


def test_inequality_one_at_tight_boundary():
    # n = (a-1)k + r: the one-block lower bound meets g with zero margin
    report = verify_large_n_inequalities(3, 2, 2, 5)
    first = report.checks[0]
    assert first.name == "g_lower_bound"
    assert first.holds and first.margin == 0
    report2 = verify_large_n_inequalities(2, 1, 3, 4)
    assert report2.checks[0].holds


def test_inequality_lower_bound_holds_at_desk_scale():
    for r in (2, 3, 4):
        for k in range(1, r):
            for a in (2, 3, 4):
                for n in range((a - 1) * k + r, (a - 1) * k + r + 15):
                    report = verify_large_n_inequalities(r, k, a, n)
                    assert report.checks[0].holds, (r, k, a, n)


def test_extremal_number_examples():
    assert extremal_number(Params(7, 2, 1, 3))[0] == 11 == g_count(7, 2, 1, 3)
    assert extremal_number(Params(5, 2, 1, 2))[0] == 4
    value, witness = extremal_number(Params(5, 3, 2, 2))
    assert value == 4 == b_family_size(5, 3, 2, 1)
    assert sorted(witness.edge_masks) == sorted(
        Hypergraph.from_masks(5, 3, complete_hypergraph(4, 3).edge_masks).edge_masks)
    assert extremal_number(Params(6, 3, 2, 2))[0] == 4
    assert extremal_number(Params(6, 3, 2, 1))[0] == 0  # a = 1 forces empty


def test_extremal_number_matches_subset_brute_force():
    for n, r, k, a in ((5, 3, 2, 2), (5, 2, 1, 2), (4, 2, 1, 2), (5, 2, 1, 3)):
        assert extremal_number(Params(n, r, k, a))[0] == \
            max_feasible_family_brute(n, r, k, a), (n, r, k, a)


def test_extremal_witness_is_feasible_and_maximal():
    p = Params(5, 3, 2, 2)
    value, witness = extremal_number(p)
    assert has_k_matching_of_size(witness, p.k, p.a) is None
    present = set(witness.edge_masks)
    for e in complete_hypergraph(5, 3).edge_masks:
        if e not in present:
            extended = Hypergraph.from_masks(5, 3, list(present) + [e])
            # optimality: every strict extension becomes infeasible
            assert has_k_matching_of_size(extended, p.k, p.a) is not None
    # downward closure: removing any edge stays feasible
    for drop in witness.edge_masks:
        sub = Hypergraph.from_masks(5, 3, [m for m in witness.edge_masks if m != drop])
        assert has_k_matching_of_size(sub, p.k, p.a) is None


def test_extremal_a2_equals_best_single_block():
    for n, r in ((5, 3), (6, 3), (5, 2), (6, 2), (4, 3)):
        for k in range(1, r):
            best_b = max(b_family_size(n, r, k, i)
                         for i in range(0, (n - k) // 2 + 1))
            assert extremal_number(Params(n, r, k, 2))[0] == best_b, (n, r, k)


def test_extremal_universe_cap_and_budget():
    with pytest.raises(ResourceBudgetError):
        extremal_number(Params(9, 3, 2, 3))  # universe 84 > default cap
    with pytest.raises(ResourceBudgetError) as info:
        extremal_number(Params(7, 2, 1, 3), budget=40)
    assert info.value.best_size is not None


def test_extremal_stable_only_matches_value():
    for n, r, k, a in ((7, 2, 1, 3), (5, 2, 1, 2), (5, 3, 2, 2), (6, 3, 2, 2),
                       (4, 2, 1, 2), (6, 2, 1, 2)):
        free = extremal_number(Params(n, r, k, a))[0]
        stable = extremal_number(Params(n, r, k, a), stable_only=True)[0]
        assert free == stable, (n, r, k, a)


def test_conjecture_value_star_case():
    report = conjecture_value(Params(5, 2, 1, 2))
    by_name = {c.name: c for c in report.candidates}
    assert by_name["h0"].size == comb(3, 2) == 3
    assert by_name["frankl_0"].size == 4
    assert report.paper_max == 4
    assert report.feasible_max == 4
    assert report.exact_value is None and report.agreement == "exact-unavailable"
    assert all(c.feasible for c in report.candidates if c.feasible is not None)


def test_conjecture_value_candidate_anomaly():
    report = conjecture_value(Params(9, 3, 2, 3))
    by_name = {c.name: c for c in report.candidates}
    assert by_name["h0"].size == 20 and by_name["h0"].nu == 4
    assert by_name["h0"].feasible is False
    assert by_name["frankl_0"].size == 14 and by_name["frankl_0"].feasible
    assert by_name["frankl_1"].size == 8 and by_name["frankl_1"].feasible
    assert report.paper_max == 20
    assert report.feasible_max == 14


def test_conjecture_value_parameter_guards():
    with pytest.raises(ParameterError):
        conjecture_value(Params(8, 3, 2, 3))  # n below r*a
    with pytest.raises(ParameterError):
        conjecture_value(Params(9, 3, 3, 3))  # k = r


def test_check_conjecture_matches():
    report = check_conjecture(Params(7, 2, 1, 3))
    assert report.exact_value == 11
    assert report.agreement == "match"
    assert report.matches_paper_max and report.matches_feasible_max
    assert report.witness is not None and len(report.witness) == 11

    report2 = check_conjecture(Params(6, 3, 2, 2))
    assert report2.exact_value == 4
    assert report2.paper_max == max(b_family_size(6, 3, 2, i) for i in (0, 1, 2))
    assert report2.agreement == "match"


def test_check_conjecture_exact_unavailable():
    report = check_conjecture(Params(9, 3, 2, 3))  # universe 84 > cap
    assert report.exact_value is None
    assert report.agreement == "exact-unavailable"
    assert report.matches_paper_max is None
    assert report.paper_max == 20 and report.feasible_max == 14


def test_exact_value_at_least_feasible_candidates():
    for n, r, k, a in ((7, 2, 1, 3), (6, 3, 2, 2), (6, 2, 1, 2), (8, 2, 1, 4)):
        report = check_conjecture(Params(n, r, k, a))
        assert report.exact_value is not None
        assert report.feasible_max is not None
        assert report.exact_value >= report.feasible_max


def test_candidate_nu_values_match_direct_solver():
    report = conjecture_value(Params(9, 3, 2, 3))
    h0 = complete_hypergraph(Params(9, 3, 2, 3).n0, 3)
    assert {c.name: c.nu for c in report.candidates}["h0"] == nu_k(h0, 2)[0]
