"""Exhaustive lattice search over ``(d, g, c)`` and canonical-curve checks."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import DomainError, NotCanonicalShape
from .invariants import CurveInvariants, genus_capacity, plucker_dual


@dataclass(frozen=True)
class SearchConstraintProfile:
    d_range: tuple[int, int]
    g_range: tuple[int, int]
    N_min: int = 5
    require_genus_formula: bool = True
    require_dual_bounds: bool = True
    require_nori_bound: bool = True
    require_congruences: bool = True
    require_dual_nonneg: bool = True

    def __post_init__(self) -> None:
        (d0, d1), (g0, g1) = self.d_range, self.g_range
        if d0 > d1 or g0 > g1 or d0 < 1 or g0 < 0:
            raise DomainError(f"empty or invalid ranges d={self.d_range}, g={self.g_range}")


@dataclass(frozen=True)
class LatticePoint:
    d: int
    g: int
    c: int
    n: int
    reason: str | None  # first violated constraint; None for survivors
    N_interval: tuple[int, int] | None = None

    @property
    def survived(self) -> bool:
        return self.reason is None


@dataclass(frozen=True)
class SearchResult:
    profile: SearchConstraintProfile
    survivors: tuple[LatticePoint, ...]
    eliminated: tuple[LatticePoint, ...]

    def eliminated_by(self, reason: str) -> list[LatticePoint]:
        return [p for p in self.eliminated if p.reason == reason]

    def point(self, d: int, g: int, c: int) -> LatticePoint:
        for p in self.survivors + self.eliminated:
            if (p.d, p.g, p.c) == (d, g, c):
                return p
        raise KeyError((d, g, c))


def competing_degree_interval(d: int, g: int, c: int, N_min: int) -> tuple[int, int] | None:
    """Integer degrees ``N >= N_min`` for which the uniqueness inequality fails.

    Also capped by ``d + 1`` and by the Hodge bound ``4d^2/(3d+g-1)``.
    """
    s = 3 * d + g - 1
    top = min(floor(Fraction(4 * s, 2 * s - c)), d + 1, floor(Fraction(4 * d * d, s)))
    lo = max(N_min, 3)
    return (lo, top) if lo <= top else None


def classify_point(d: int, g: int, c: int, profile: SearchConstraintProfile) -> LatticePoint:
    n = genus_capacity(d) - g - c
    s = 3 * d + g - 1

    def out(reason, interval=None):
        return LatticePoint(d, g, c, n, reason, interval)

    if profile.require_genus_formula and n < 0:
        return out("genus_formula")
    if profile.require_dual_bounds:
        if c > 4 * d + 2 * g - 2:
            return out("cusps_le_dual_degree_bound")
        if c > 3 * d + 3 * g - 3:
            return out("cusps_le_dual_cusp_bound")
    if profile.require_nori_bound and s > 2 * c:
        return out("nori_cusp_lower_bound")
    if profile.require_congruences:
        if c % 3:
            return out("cusps_mod_3")
        if n % 4:
            return out("nodes_mod_4")
    if profile.require_dual_nonneg and n >= 0:
        dual = plucker_dual(CurveInvariants(d, g, c, n))
        if dual.delta < 1 or dual.gamma < 0 or dual.nu < 0:
            return out("dual_nonnegative")
    interval = competing_degree_interval(d, g, c, profile.N_min)
    if interval is None:
        return out("no_competing_degree")
    return out(None, interval)


def _search_slice(args) -> list[LatticePoint]:
    d, profile = args
    points = []
    for g in range(profile.g_range[0], profile.g_range[1] + 1):
        # c < 2(3d+g-1) keeps the threshold finite
        for c in range(0, 2 * (3 * d + g - 1)):
            points.append(classify_point(d, g, c, profile))
    return points


def find_potential_counterexamples(profile: SearchConstraintProfile, workers: int = 1) -> SearchResult:
    """Enumerate ``(d, g, c)`` lattice points and keep those that could carry
    two non-equivalent covers, one of degree ``>= N_min``.

    Cusp counts range over ``0 <= c < 2(3d+g-1)``.  Every other point carries
    the name of the first constraint it violates.
    """
    slices = [(d, profile) for d in range(profile.d_range[0], profile.d_range[1] + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_search_slice, slices))
    else:
        chunks = [_search_slice(s) for s in slices]
    points = sorted((p for chunk in chunks for p in chunk), key=lambda p: (p.d, p.g, p.c))
    return SearchResult(
        profile,
        tuple(p for p in points if p.survived),
        tuple(p for p in points if not p.survived),
    )


@dataclass(frozen=True)
class CanonicalCheck:
    m: Fraction
    k: Fraction
    N: Fraction
    p_a: Fraction
    all_integral: bool
    h0_dims: tuple[int, ...]


def _positive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def canonical_conditions(inv: CurveInvariants) -> CanonicalCheck:
    """Recover ``(m, K^2, N, chi)`` of a putative m-canonical cover from the curve.

    When everything is a positive integer, also lists
    ``h^0(R, r*kappa) = r(r-1)k/2 + p_a`` for ``r = 2 .. 3m``.
    """
    d, g, c = inv.d, inv.g, inv.c
    excess = g - 3 * d - 1
    s = inv.ramification_square
    if excess == 0 or s <= 0:
        raise NotCanonicalShape(f"g-3d-1 = {excess}, 3d+g-1 = {s}")
    m = Fraction(2 * d, excess)
    if m <= 0:
        raise NotCanonicalShape(f"m = 2d/(g-3d-1) = {m} <= 0")
    k = Fraction(excess * excess, s)
    N = Fraction(4 * d * d, s)
    p_a = N + Fraction(3 * g - 3 - 9 * d - c, 12)
    integral = all(_positive_int(x) for x in (m, k, N, p_a))
    dims: tuple[int, ...] = ()
    if integral:
        mm, kk, pp = int(m), int(k), int(p_a)
        dims = tuple(r * (r - 1) * kk // 2 + pp for r in range(2, 3 * mm + 1))
    return CanonicalCheck(m, k, N, p_a, integral, dims)


def singular_divisor_degree_check(inv: CurveInvariants, m: int, k: int) -> bool:
    """Degree of cusp + node preimages equals ``[(2d-6)m - 2] deg(kappa)``.

    Cusp preimages are counted twice and each node contributes two points,
    so the left side is ``2c + 2n``; ``deg(kappa) = (3m+1)k``.
    """
    check = canonical_conditions(inv)
    if not check.all_integral or (check.m, check.k) != (m, k):
        raise DomainError(f"curve does not satisfy the canonical conditions with m={m}, k={k}")
    return 2 * inv.c + 2 * inv.n == ((2 * inv.d - 6) * m - 2) * (3 * m + 1) * k
