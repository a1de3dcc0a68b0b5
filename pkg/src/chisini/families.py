"""Branch-curve invariants for standard families of generic covers.

Each generator maps the surface data of a family to the invariants of the
discriminant curve and runs the uniqueness threshold on it.  Impossible
parameter values surface as the usual :mod:`chisini.errors` exceptions
(mostly :class:`~chisini.errors.NegativeNodes`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import prod
from typing import Iterable

from .criterion import ChisiniVerdict, chisini_check
from .errors import DomainError, InvariantError, NegativeCusps, NoThresholdFound
from .invariants import (
    CurveInvariants,
    complete_morphism_invariants,
    nodes_from_genus,
    validate_discriminant_candidate,
)

# Non-uniqueness only matters for the conjecture when some cover of degree
# >= 5 could share the branch curve.
CONJECTURE_MIN_DEGREE = 5

PERSSON_CUBE_CONSTANT = 31104  # (8 * 9 / 12**(1/3))**3 = 512 * 729 / 12


class Family(str, enum.Enum):
    GeneralTypeMK = "general-type"
    DelPezzo = "del-pezzo"
    QuadricP1xP1 = "quadric"
    K3 = "k3"
    Enriques = "enriques"
    Abelian = "abelian"
    CompleteIntersection = "complete-intersection"
    DualOfNodal = "dual-nodal"
    AmpleLPower = "ample-power"
    ZariskiTriple = "zariski"
    AbelianDoubleCover = "abelian-double-cover"


TRIVIAL_CANONICAL_PA = {Family.K3: 2, Family.Enriques: 1, Family.Abelian: 0}


@dataclass(frozen=True)
class FamilyCase:
    family: Family
    params: dict
    curve: CurveInvariants | None
    N: int
    verdict: ChisiniVerdict | None
    notes: tuple[str, ...] = ()
    extra: dict = field(default_factory=dict)
    flag: str | None = None

    @property
    def unique(self) -> bool | None:
        if self.verdict is not None:
            return self.verdict.unique
        return self.extra.get("unique")


def _companion_notes(curve: CurveInvariants, N: int) -> tuple[str, ...]:
    if N == 4 and curve.n == 0:
        # composing the monodromy with S4 -> S4/K4 = S3 keeps every local condition
        return ("degree-3 companion cover with the same branch curve via S4 -> S4/K4 = S3",)
    return ()


def _finish(family: Family, params: dict, d: int, g: int, c: int, N: int, notes=()) -> FamilyCase:
    if c < 0:
        raise NegativeCusps(f"cusp count {c} < 0")
    curve = CurveInvariants(d, g, c, nodes_from_genus(d, g, c))
    verdict = chisini_check(curve, N)
    return FamilyCase(family, params, curve, N, verdict, tuple(notes) + _companion_notes(curve, N))


def general_type_mk(m: int, k: int, p_a: int) -> FamilyCase:
    """Cover given by a web in ``|mK_S|`` with ``K_S^2 = k``, ``chi(O_S) = p_a``."""
    if m < 1 or k < 1 or p_a < 1:
        raise DomainError(f"need m, k, p_a >= 1; got {m}, {k}, {p_a}")
    N = m * m * k
    if N < 3:
        raise DomainError(f"degree m^2 k = {N} < 3")
    d = m * (3 * m + 1) * k // 2
    g = 1 + (3 * m + 2) * (3 * m + 1) * k // 2
    c = (12 * m * m + 9 * m + 3) * k - 12 * p_a
    return _finish(Family.GeneralTypeMK, {"m": m, "k": k, "p_a": p_a}, d, g, c, N)


def _relevant_exception(case: FamilyCase, min_degree: int) -> bool:
    v = case.verdict
    return v is not None and not v.unique and v.max_competing_degree >= min_degree


def enumerate_general_type_exceptions(
    k_max: int = 20, pa_max: int = 20, m_max: int = 8, min_degree: int = CONJECTURE_MIN_DEGREE
) -> list[FamilyCase]:
    """Every realizable ``(m, k, p_a)`` whose branch curve escapes the threshold."""
    if k_max < 1 or pa_max < 1 or m_max < 1:
        raise DomainError("sweep bounds must be >= 1")
    out = []
    for m in range(1, m_max + 1):
        for k in range(1, k_max + 1):
            if m * m * k < 3:
                continue
            for p_a in range(1, pa_max + 1):
                try:
                    case = general_type_mk(m, k, p_a)
                except InvariantError:
                    continue
                if not validate_discriminant_candidate(case.curve).ok:
                    continue
                if _relevant_exception(case, min_degree):
                    out.append(case)
    return sorted(out, key=lambda cs: (cs.params["m"], cs.params["k"], cs.params["p_a"]))


def general_type_impossible_cases(k_max: int = 20, pa_max: int = 20, m_max: int = 8) -> list[tuple[dict, str]]:
    """Parameters in the sweep rejected outright, with the exception name."""
    out = []
    for m in range(1, m_max + 1):
        for k in range(1, k_max + 1):
            if m * m * k < 3:
                continue
            for p_a in range(1, pa_max + 1):
                try:
                    general_type_mk(m, k, p_a)
                except InvariantError as exc:
                    out.append(({"m": m, "k": k, "p_a": p_a}, type(exc).__name__))
    return out


def del_pezzo(m: int, k: int) -> FamilyCase:
    """Cover given by a web in ``|-mK_S|`` on a del Pezzo surface of degree ``k``."""
    if not 1 <= k <= 9 or m < 1:
        raise DomainError(f"need m >= 1 and 1 <= k <= 9; got m={m}, k={k}")
    N = m * m * k
    if N < 3:
        raise DomainError(f"degree m^2 k = {N} < 3")
    d = m * (3 * m - 1) * k // 2
    g = 1 + (3 * m - 2) * (3 * m - 1) * k // 2
    c = (12 * m * m - 9 * m + 3) * k - 12
    case = _finish(Family.DelPezzo, {"m": m, "k": k}, d, g, c, N)
    assert case.verdict.unique, f"del Pezzo cover not unique: {case}"
    return case


def quadric(a: int, b: int) -> FamilyCase:
    """Cover of P1 x P1 by a web in ``|aL1 + bL2|``."""
    if b < 1 or a < b:
        raise DomainError(f"need a >= b >= 1; got a={a}, b={b}")
    N = 2 * a * b
    d = 3 * a * b - a - b
    g = 9 * (a * b - a - b) + 9
    c = 24 * a * b - 18 * a - 18 * b + 12
    params = {"a": a, "b": b}
    if (a, b) == (1, 1):
        curve = CurveInvariants(d, g, c, nodes_from_genus(d, g, c))
        return FamilyCase(
            Family.QuadricP1xP1, params, curve, N, None,
            ("double plane branched along a smooth conic; no cover of degree >= 3",),
            flag="smooth_double_plane",
        )
    case = _finish(Family.QuadricP1xP1, params, d, g, c, N)
    assert case.verdict.unique, f"quadric cover not unique: {case}"
    return case


def trivial_canonical(k: int, kind: Family | str) -> FamilyCase:
    """K3, Enriques or abelian surface with ``E^2 = 2k``."""
    kind = Family(kind)
    if kind not in TRIVIAL_CANONICAL_PA:
        raise DomainError(f"kind must be K3, Enriques or Abelian, got {kind}")
    if k < 2:
        raise DomainError(f"need k >= 2 (degree 2k > 2); got k={k}")
    p_a = TRIVIAL_CANONICAL_PA[kind]
    return _finish(kind, {"k": k, "p_a": p_a}, 3 * k, 9 * k + 1, 24 * k - 12 * p_a, 2 * k)


def hypersurface_euler(m: int) -> int:
    return m**3 - 4 * m**2 + 6 * m


def complete_intersection(degrees: Iterable[int]) -> FamilyCase:
    """Generic projection of a smooth complete intersection of the given degrees.

    Only a single degree (a surface in P3) has a known Euler number here, so
    for two or more degrees the result carries the positivity certificate
    ``3 prod(m_i) - 4 sum(m_i - 1)`` instead of curve invariants.
    """
    degrees = tuple(degrees)
    if not degrees or any(m < 2 for m in degrees):
        raise DomainError(f"need at least one degree, all >= 2; got {degrees}")
    N = prod(degrees)
    s1 = sum(m - 1 for m in degrees)
    d = s1 * N // 2
    g = 1 + s1 * (2 * s1 - 3) * N // 2
    params = {"degrees": list(degrees)}
    if len(degrees) >= 2:
        cert = 3 * N - 4 * s1
        return FamilyCase(
            Family.CompleteIntersection, params, None, N, None,
            ("Euler number not computed for codimension >= 2; positivity certificate only",),
            extra={"d": d, "g": g, "certificate": cert, "unique": cert > 0},
        )
    m = degrees[0]
    e = hypersurface_euler(m)
    c = 3 * N + 2 * (g - 1) - e
    if m == 2:
        curve = CurveInvariants(d, g, c, nodes_from_genus(d, g, c))
        return FamilyCase(
            Family.CompleteIntersection, params, curve, N, None,
            ("double plane branched along a smooth conic; no cover of degree >= 3",),
            extra={"euler": e}, flag="smooth_double_plane",
        )
    case = _finish(Family.CompleteIntersection, params, d, g, c, N)
    case.extra["euler"] = e
    return case


def dual_of_nodal(delta: int, g: int) -> FamilyCase:
    """Dual of a nodal plane curve of degree ``delta`` and genus ``g``."""
    if delta < 3:
        raise DomainError(f"need delta >= 3; got {delta}")
    top = (delta - 1) * (delta - 2) // 2
    if not 0 <= g <= top:
        raise DomainError(f"need 0 <= g <= {top}; got {g}")
    case = _finish(Family.DualOfNodal, {"delta": delta, "g": g}, delta + g - 1, g, 3 * delta + 6 * (g - 1), delta)
    case.extra["dual_nodes"] = top - g
    return case


def competitor_obstruction(curve: CurveInvariants, N: int) -> str | None:
    """Why no generic cover of degree ``N`` can have this branch curve, if known.

    Besides integrality and the degree bounds this applies the numerical
    constraint on ruled surfaces: ``chi(O_S) < 0`` forces ``S`` to be ruled
    over a curve of genus ``1 - chi``, whose minimal model has Euler number
    ``4 chi``; blow-ups only increase it.
    """
    try:
        mi = complete_morphism_invariants(curve, N)
    except InvariantError as exc:
        return type(exc).__name__
    if mi.p_a < 0 and mi.euler < 4 * mi.p_a:
        return "ruled_surface_euler_bound"
    return None


def enumerate_dual_nodal_exceptions(
    delta_min: int = 3,
    delta_max: int = 7,
    g_filter=None,
    min_degree: int = CONJECTURE_MIN_DEGREE,
) -> list[FamilyCase]:
    """Dual-of-nodal curves escaping the threshold.

    A case whose every competing degree ``>= min_degree`` is excluded by
    :func:`competitor_obstruction` is kept but flagged, since that exclusion
    rests on surface classification rather than on the curve invariants.
    """
    out = []
    for delta in range(max(3, delta_min), delta_max + 1):
        for g in range((delta - 1) * (delta - 2) // 2 + 1):
            if g_filter is not None and not g_filter(g):
                continue
            try:
                case = dual_of_nodal(delta, g)
            except InvariantError:
                continue
            if not validate_discriminant_candidate(case.curve).ok:
                continue
            if not _relevant_exception(case, min_degree):
                continue
            degrees = range(min_degree, case.verdict.max_competing_degree + 1)
            reasons = {N: competitor_obstruction(case.curve, N) for N in degrees}
            if all(reasons.values()):
                evidence = {}
                for N in degrees:
                    try:
                        mi = complete_morphism_invariants(case.curve, N)
                        evidence[N] = {"K2": mi.K2, "euler": mi.euler, "p_a": mi.p_a}
                    except InvariantError:
                        pass
                case = FamilyCase(
                    case.family, case.params, case.curve, case.N, case.verdict, case.notes,
                    {**case.extra, "obstructions": reasons, "competitor_invariants": evidence},
                    flag="ruled_surface_argument",
                )
            out.append(case)
    return sorted(out, key=lambda cs: (-cs.params["delta"], -cs.params["g"]))


def ample_power_margin(m: int, a: int, b: int, k: int, euler: int) -> int:
    """``N[2(3d+g-1) - c] - 4(3d+g-1)`` for ``E = mL`` (positive iff unique)."""
    return m * m * a * (6 * m * m * a + 3 * m * b + euler) - 4 * (9 * m * m * a + 6 * m * b + k)


def ample_power_curve(m: int, a: int, b: int, k: int, euler: int) -> CurveInvariants | None:
    """Branch curve of a web in ``|mL|``, or None when the numbers are impossible."""
    N = m * m * a
    two_d = m * b + 3 * m * m * a
    two_g_minus_2 = 9 * m * m * a + 9 * m * b + 2 * k
    c = 12 * m * m * a + 9 * m * b + 2 * k - euler
    if N < 3 or two_d <= 0 or two_d % 2 or two_g_minus_2 % 2 or two_g_minus_2 < -2 or c < 0:
        return None
    d, g = two_d // 2, two_g_minus_2 // 2 + 1
    try:
        return CurveInvariants(d, g, c, nodes_from_genus(d, g, c))
    except InvariantError:
        return None


def ample_power_threshold(
    a: int, b: int, k: int, euler: int, *, horizon: int = 1000, realizable_only: bool = False
) -> int:
    """Least ``m0`` such that every ``m >= m0`` (up to ``horizon``) gives uniqueness.

    Data: ``a = L^2``, ``b = (K_S, L)``, ``k = K_S^2``, ``euler = e(S)``.  With
    ``realizable_only`` the values of ``m`` whose branch curve cannot exist
    (non-integral genus, negative nodes or cusps, degree < 3) are skipped.
    """
    if a <= 0:
        raise DomainError(f"L^2 must be positive; got {a}")
    last_bad = 0
    for m in range(1, horizon + 1):
        if ample_power_margin(m, a, b, k, euler) > 0:
            continue
        if realizable_only and ample_power_curve(m, a, b, k, euler) is None:
            continue
        last_bad = m
    if last_bad == horizon:
        raise NoThresholdFound(f"inequality still fails at m = {horizon}")
    return last_bad + 1


def zariski_triple(m: int) -> tuple[int, int, int]:
    """Degree, genus and cusp count of the m-canonical branch curves with K^2 = p_a = 1."""
    if m < 5:
        raise DomainError(f"need m >= 5; got {m}")
    deg = m * (3 * m + 1)
    g = (3 * m + 1) * (3 * m + 2) // 2 + 1
    c = 3 * (4 * m * m + 3 * m - 3)
    curve = general_type_mk(m, 1, 1).curve
    assert (curve.degree, curve.g, curve.c) == (deg, g, c)
    return deg, g, c


def persson_admissible(x: int, y: int) -> bool:
    """``2x - 6 <= y <= 8(x - c x^(2/3))`` with ``c = 9 / 12^(1/3)``, in integers."""
    if x < 1 or y < 1:
        raise DomainError(f"need x, y >= 1; got {x}, {y}")
    if y < 2 * x - 6:
        return False
    slack = 8 * x - y
    return slack >= 0 and slack**3 >= PERSSON_CUBE_CONSTANT * x * x


def minimal_persson_p(limit: int = 100_000) -> int:
    for p in range(1, limit + 1):
        if persson_admissible(p, 4 * p):
            return p
    raise NoThresholdFound(f"no admissible p <= {limit}")


def abelian_double_cover(p: int) -> tuple[int, int]:
    """``(K^2, chi)`` of a double cover of an abelian surface branched in ``C^2 = 8p``."""
    if p < 1:
        raise DomainError(f"need p >= 1; got {p}")
    return 4 * p, p
