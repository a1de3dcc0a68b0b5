import pytest

from chisini.errors import DomainError, InvariantError, NegativeCusps, NegativeNodes, NoThresholdFound
from chisini.families import (
    PERSSON_CUBE_CONSTANT,
    Family,
    abelian_double_cover,
    ample_power_curve,
    ample_power_margin,
    ample_power_threshold,
    complete_intersection,
    competitor_obstruction,
    del_pezzo,
    dual_of_nodal,
    enumerate_dual_nodal_exceptions,
    enumerate_general_type_exceptions,
    general_type_impossible_cases,
    general_type_mk,
    minimal_persson_p,
    persson_admissible,
    quadric,
    trivial_canonical,
    zariski_triple,
)
from chisini.invariants import CurveInvariants, validate_discriminant_candidate


def _curve_tuple(case):
    cv = case.curve
    return cv.degree, cv.g, cv.c, cv.n


def _sweep(gen, params):
    for p in params:
        try:
            yield p, gen(*p)
        except (DomainError, NegativeNodes, NegativeCusps):
            continue


def test_general_type_formula_chain():
    case = general_type_mk(1, 5, 1)
    assert _curve_tuple(case) == (20, 51, 108, 12)
    assert case.N == 5
    with pytest.raises(NegativeNodes):
        general_type_mk(2, 1, 1)
    with pytest.raises(DomainError):
        general_type_mk(1, 2, 1)  # degree 2


def test_general_type_exceptions_and_impossible_cases():
    cases = enumerate_general_type_exceptions(k_max=8, pa_max=6, m_max=4)
    assert [_curve_tuple(c) for c in cases] == [(20, 51, 108, 12), (20, 51, 96, 24), (24, 61, 132, 60)]
    bad = general_type_impossible_cases(k_max=4, pa_max=3, m_max=8)
    assert sorted((p["m"], p["k"], p["p_a"]) for p, _ in bad) == [
        (1, 3, 1), (1, 3, 2), (1, 3, 3), (1, 4, 1), (1, 4, 2), (2, 1, 1)
    ]
    assert {r for _, r in bad} == {"NegativeNodes"}


def test_general_type_validation_failures_are_cusp_lower_bound_only():
    for _, case in _sweep(general_type_mk, [(m, k, p) for m in range(1, 6) for k in range(1, 13) for p in range(1, 13)]):
        rep = validate_discriminant_candidate(case.curve)
        assert set(rep.violations) <= {"nori_cusp_lower_bound"}
        assert case.curve.c % 3 == 0 and case.curve.n % 4 == 0


def test_del_pezzo_and_quadric_always_unique():
    n = 0
    for _, case in _sweep(del_pezzo, [(m, k) for m in range(1, 11) for k in range(1, 10)]):
        assert validate_discriminant_candidate(case.curve).ok
        assert case.verdict.N > case.verdict.threshold
        n += 1
    for (a, b), case in _sweep(quadric, [(a, b) for a in range(1, 11) for b in range(1, a + 1)]):
        assert validate_discriminant_candidate(case.curve).ok
        if (a, b) == (1, 1):
            assert case.flag == "smooth_double_plane"
        else:
            assert case.verdict.unique
        n += 1
    assert n > 100


def test_trivial_canonical_surfaces():
    for k in range(2, 21):
        case = trivial_canonical(k, Family.K3)
        assert validate_discriminant_candidate(case.curve).ok and case.unique
    enriques = trivial_canonical(2, "enriques")
    assert _curve_tuple(enriques) == (12, 19, 36, 0)
    assert enriques.verdict.threshold == 4 and not enriques.unique
    assert any("degree-3" in note for note in enriques.notes)
    abelian = trivial_canonical(3, "abelian")
    assert _curve_tuple(abelian) == (18, 28, 72, 36)
    assert abelian.verdict.threshold == 6
    with pytest.raises(NegativeNodes):
        trivial_canonical(2, "abelian")


def test_complete_intersections():
    quartic = complete_intersection([4])
    k3 = trivial_canonical(2, Family.K3)
    assert (quartic.curve, quartic.N) == (k3.curve, k3.N)
    assert quartic.extra["euler"] == 24
    conic = complete_intersection([2])
    assert conic.flag == "smooth_double_plane" and conic.curve == CurveInvariants(1, 0, 0, 0)
    two = complete_intersection([2, 3])
    assert two.curve is None and two.extra["certificate"] == 3 * 6 - 4 * 3 and two.unique


def test_dual_nodal_sweep():
    cases = enumerate_dual_nodal_exceptions(3, 12)
    got = [(_curve_tuple(c), c.verdict.max_competing_degree, c.flag) for c in cases]
    assert got == [
        ((30, 10, 72, 324), 6, None),
        ((20, 6, 45, 120), 5, None),
        ((18, 5, 39, 92), 5, None),
        ((16, 4, 33, 68), 5, None),
        ((12, 3, 24, 28), 5, "ruled_surface_argument"),
    ]
    assert cases[0].verdict.threshold == 6
    for delta in range(3, 13):
        for g in range((delta - 1) * (delta - 2) // 2 + 1):
            assert validate_discriminant_candidate(dual_of_nodal(delta, g).curve).ok


def test_ruled_surface_obstruction():
    curve = dual_of_nodal(4, 3).curve
    assert competitor_obstruction(curve, 5) == "ruled_surface_euler_bound"
    assert competitor_obstruction(curve, 4) is None
    assert competitor_obstruction(CurveInvariants(3, 1, 9, 0), 5) == "GenusViolation"


def test_ample_power():
    # del Pezzo data with L = -K: (a, b, k, e) = (k, -k, k, 12 - k)
    for k in range(1, 10):
        for m in range(1, 8):
            dp = ample_power_curve(m, k, -k, k, 12 - k)
            if m * m * k < 3:
                continue
            assert dp == del_pezzo(m, k).curve
            assert ample_power_margin(m, k, -k, k, 12 - k) > 0
    assert ample_power_threshold(1, 1, 1, 11) == 3
    assert ample_power_threshold(1, 1, 1, 11, realizable_only=True) == 1
    assert ample_power_threshold(1, 0, 0, 24) == 2
    with pytest.raises(NoThresholdFound):
        ample_power_threshold(1, -1000, 0, 0, horizon=5)


def test_canonical_ample_power_threshold_at_most_two():
    # L = K_S on a minimal surface of general type: b = a = k
    for k in range(1, 12):
        for p_a in range(1, 12):
            e = 12 * p_a - k
            if e <= 0:
                continue
            assert ample_power_threshold(k, k, k, e, realizable_only=True) <= 2


def test_zariski_and_persson():
    assert zariski_triple(5) == (80, 137, 336)
    for m in range(5, 12):
        deg, g, c = zariski_triple(m)
        assert _curve_tuple(general_type_mk(m, 1, 1))[:3] == (deg, g, c)
    with pytest.raises(DomainError):
        zariski_triple(4)
    p = minimal_persson_p()
    assert p == 486
    assert (8 * p - 4 * p) ** 3 == PERSSON_CUBE_CONSTANT * p * p == 1944**3
    assert not persson_admissible(485, 4 * 485)
    assert abelian_double_cover(p) == (1944, 486)


def test_family_errors():
    for bad in (lambda: del_pezzo(1, 10), lambda: quadric(1, 2), lambda: trivial_canonical(1, "k3"),
                lambda: complete_intersection([1]), lambda: dual_of_nodal(2, 0)):
        with pytest.raises(InvariantError):
            bad()
