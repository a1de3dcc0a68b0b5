from fractions import Fraction

import pytest

from chisini.errors import DomainError, NotCanonicalShape
from chisini.families import general_type_mk
from chisini.invariants import CurveInvariants
from chisini.search import (
    SearchConstraintProfile,
    canonical_conditions,
    classify_point,
    competing_degree_interval,
    find_potential_counterexamples,
    singular_divisor_degree_check,
)


def test_small_search_survivor_and_reasons():
    res = find_potential_counterexamples(SearchConstraintProfile((1, 6), (0, 3)))
    assert [(p.d, p.g, p.c, p.n, p.N_interval) for p in res.survivors] == [(6, 3, 24, 28, (5, 5))]
    assert all(p.reason for p in res.eliminated)
    assert res.point(4, 3, 18).reason == "dual_nonnegative"
    assert res.point(3, 3, 15).reason == "genus_formula"
    assert res.point(5, 3, 21).reason == "dual_nonnegative"
    # every (d, g, c) with c < 2(3d+g-1) appears exactly once
    total = sum(2 * (3 * d + g - 1) for d in range(1, 7) for g in range(4))
    assert len(res.survivors) + len(res.eliminated) == total


def test_genus_two_cubic_has_no_candidates():
    res = find_potential_counterexamples(SearchConstraintProfile((3, 3), (2, 2)))
    assert res.survivors == ()


def test_low_genus_search_is_empty():
    res = find_potential_counterexamples(SearchConstraintProfile((1, 40), (0, 1)), workers=2)
    assert res.survivors == ()


def test_parallel_matches_serial():
    prof = SearchConstraintProfile((1, 8), (0, 4))
    assert find_potential_counterexamples(prof) == find_potential_counterexamples(prof, workers=3)


def test_dropping_constraints_only_adds_survivors():
    strict = find_potential_counterexamples(SearchConstraintProfile((1, 7), (0, 3)))
    loose = find_potential_counterexamples(
        SearchConstraintProfile((1, 7), (0, 3), require_congruences=False, require_dual_nonneg=False)
    )
    keys = lambda r: {(p.d, p.g, p.c) for p in r.survivors}  # noqa: E731
    assert keys(strict) <= keys(loose)
    assert len(keys(loose)) > len(keys(strict))


def test_classify_first_violation():
    prof = SearchConstraintProfile((2, 2), (2, 2))
    # 3d+g-1 = 7 > 2c, so the cusp lower bound is hit before the congruence
    assert classify_point(2, 2, 1, prof).reason == "nori_cusp_lower_bound"
    prof = SearchConstraintProfile((2, 2), (2, 2), require_nori_bound=False)
    assert classify_point(2, 2, 1, prof).reason == "cusps_mod_3"
    assert competing_degree_interval(15, 10, 72, 5) == (5, 6)


def test_profile_rejects_empty_ranges():
    with pytest.raises(DomainError):
        SearchConstraintProfile((5, 4), (0, 1))


def test_canonical_round_trip():
    n = 0
    for m in range(1, 7):
        for k in range(1, 13):
            for p_a in range(1, 7):
                if m * m * k < 3:
                    continue
                try:
                    case = general_type_mk(m, k, p_a)
                except ValueError:
                    continue
                chk = canonical_conditions(case.curve)
                assert (chk.m, chk.k, chk.N, chk.p_a) == (m, k, m * m * k, p_a)
                assert chk.all_integral
                assert singular_divisor_degree_check(case.curve, m, k)
                n += 1
    assert n > 300


def test_canonical_dimensions():
    chk = canonical_conditions(general_type_mk(1, 5, 1).curve)
    assert chk.h0_dims == (6, 16)  # r = 2, 3: r(r-1)k/2 + p_a


def test_not_canonical():
    with pytest.raises(NotCanonicalShape):
        canonical_conditions(CurveInvariants(3, 1, 9, 0))
    chk = canonical_conditions(CurveInvariants.from_dgc(10, 50, 108))
    assert not chk.all_integral and isinstance(chk.m, Fraction)
    with pytest.raises(DomainError):
        singular_divisor_degree_check(CurveInvariants(10, 51, 108, 12), 2, 5)
