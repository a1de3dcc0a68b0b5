"""Numerical invariants of cuspidal plane curves and of generic covers.

A curve ``B`` of degree ``2d`` with geometric genus ``g``, ``c`` ordinary
cusps and ``n`` nodes is stored by its half-degree ``d``.  Everything here
is exact integer or :class:`fractions.Fraction` arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateDenominator,
    GenusViolation,
    HodgeBoundViolation,
    InconsistentDual,
    NegativeNodes,
    NonIntegralChi,
)

Rational = Fraction


def _check_int(name: str, value: object) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")


def genus_capacity(d: int) -> int:
    """Arithmetic genus ``(2d-1)(d-1)`` of a plane curve of degree ``2d``."""
    return (2 * d - 1) * (d - 1)


@dataclass(frozen=True)
class CurveInvariants:
    d: int
    g: int
    c: int
    n: int

    def __post_init__(self) -> None:
        for name in ("d", "g", "c", "n"):
            _check_int(name, getattr(self, name))
        if self.d < 1:
            raise ValueError(f"half-degree d must be >= 1, got {self.d}")
        for name in ("g", "c", "n"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative, got {getattr(self, name)}")

    @classmethod
    def from_dgc(cls, d: int, g: int, c: int) -> "CurveInvariants":
        """Build the curve, deriving the node count from the genus formula."""
        return cls(d, g, c, nodes_from_genus(d, g, c))

    @property
    def degree(self) -> int:
        return 2 * self.d

    @property
    def genus_consistent(self) -> bool:
        return self.g + self.c + self.n == genus_capacity(self.d)

    @property
    def ramification_square(self) -> int:
        """``3d + g - 1``, the self-intersection of the ramification curve."""
        return 3 * self.d + self.g - 1


@dataclass(frozen=True)
class DualInvariants:
    delta: int
    gamma: int
    nu: int


@dataclass(frozen=True)
class MorphismInvariants:
    N: int
    K2: int
    euler: int
    p_a: int
    R2: int
    gE: int


def nodes_from_genus(d: int, g: int, c: int) -> int:
    """Node count forced by the genus formula ``g + c + n = (2d-1)(d-1)``.

    >>> nodes_from_genus(10, 51, 108)
    12
    """
    if d < 1 or g < 0 or c < 0:
        raise ValueError(f"need d >= 1, g >= 0, c >= 0; got d={d}, g={g}, c={c}")
    n = genus_capacity(d) - g - c
    if n < 0:
        raise NegativeNodes(
            f"(2d-1)(d-1) - g - c = {genus_capacity(d)} - {g} - {c} = {n} < 0"
        )
    return n


def dual_plane_curve(degree: int, genus: int, cusps: int, nodes: int) -> tuple[int, int, int, int]:
    """Class, genus, cusps and nodes of the dual of a cuspidal plane curve.

    Works for any degree (odd degrees appear after one dualisation).  The
    class and cusp count come from the linearised Plücker formulas; the node
    count from the genus formula of the dual.
    """
    delta = 2 * degree + 2 * genus - 2 - cusps
    gamma = 3 * degree + 6 * genus - 6 - 2 * cusps
    twice_nu = (delta - 1) * (delta - 2) - 2 * genus - 2 * gamma
    # (delta-1)(delta-2) is always even
    return delta, genus, gamma, twice_nu // 2


def plucker_dual(inv: CurveInvariants) -> DualInvariants:
    """Dual invariants, cross-checked against the raw quadratic formulas."""
    D = inv.degree
    delta, _, gamma, nu = dual_plane_curve(D, inv.g, inv.c, inv.n)
    raw_delta = D * (D - 1) - 2 * inv.n - 3 * inv.c
    if raw_delta != delta:
        raise InconsistentDual(
            f"class {delta} from genus/cusps disagrees with D(D-1)-2n-3c = {raw_delta}"
        )
    if delta * (delta - 1) - 2 * nu - 3 * gamma != D:
        raise InconsistentDual("second Plücker formula fails")
    if (delta - 1) * (delta - 2) - 2 * nu - 2 * gamma != 2 * inv.g:
        raise InconsistentDual("dual genus formula fails")
    return DualInvariants(delta, gamma, nu)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    inv: CurveInvariants
    checks: tuple[Check, ...]
    smooth_double_plane: bool
    dual: DualInvariants | None

    @property
    def ok(self) -> bool:
        return all(ch.passed for ch in self.checks)

    @property
    def violations(self) -> list[str]:
        return [ch.name for ch in self.checks if not ch.passed]

    def __getitem__(self, name: str) -> Check:
        for ch in self.checks:
            if ch.name == name:
                return ch
        raise KeyError(name)


CHECK_ORDER = (
    "genus_formula",
    "nodes_nonnegative",
    "cusps_le_dual_degree_bound",
    "cusps_le_dual_cusp_bound",
    "nori_cusp_lower_bound",
    "cusps_mod_3",
    "nodes_mod_4",
    "dual_nonnegative",
)


def validate_discriminant_candidate(inv: CurveInvariants) -> ValidationReport:
    """Run every necessary condition and report which ones hold.

    A smooth branch curve (``c = n = 0``, the double-plane case) is accepted
    with the cusp lower bound waived.
    """
    d, g, c, n = inv.d, inv.g, inv.c, inv.n
    s = inv.ramification_square
    smooth = c == 0 and n == 0
    dual: DualInvariants | None = None
    if inv.genus_consistent:
        dual = plucker_dual(inv)

    checks = [
        Check("genus_formula", inv.genus_consistent, f"g+c+n={g + c + n}, (2d-1)(d-1)={genus_capacity(d)}"),
        Check("nodes_nonnegative", n >= 0, f"n={n}"),
        Check("cusps_le_dual_degree_bound", c <= 4 * d + 2 * g - 2, f"c={c} <= {4 * d + 2 * g - 2}"),
        Check("cusps_le_dual_cusp_bound", c <= 3 * d + 3 * g - 3, f"c={c} <= {3 * d + 3 * g - 3}"),
        Check(
            "nori_cusp_lower_bound",
            smooth or s <= 2 * c,
            "waived for a smooth branch curve" if smooth else f"3d+g-1={s} <= 2c={2 * c}",
        ),
        Check("cusps_mod_3", c % 3 == 0, f"c mod 3 = {c % 3}"),
        Check("nodes_mod_4", n % 4 == 0, f"n mod 4 = {n % 4}"),
    ]
    if dual is None:
        checks.append(Check("dual_nonnegative", False, "dual undefined: genus formula fails"))
    else:
        dual_ok = dual.delta >= 1 and dual.gamma >= 0 and dual.nu >= 0
        checks.append(
            Check("dual_nonnegative", dual_ok, f"delta={dual.delta}, gamma={dual.gamma}, nu={dual.nu}")
        )
    return ValidationReport(inv, tuple(checks), smooth, dual)


def hodge_degree_bound(d: int, g: int) -> Fraction:
    """Upper bound ``4d^2 / (3d+g-1)`` on the degree of any generic cover."""
    s = 3 * d + g - 1
    if s <= 0:
        raise DegenerateDenominator(f"3d+g-1 = {s} <= 0")
    return Fraction(4 * d * d, s)


def line_degree_bound(d: int) -> int:
    """``deg f <= d + 1``, from the genus of the preimage of a line."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return d + 1


def complete_morphism_invariants(inv: CurveInvariants, N: int) -> MorphismInvariants:
    """Surface invariants of a degree-``N`` generic cover branched along ``inv``."""
    d, g, c = inv.d, inv.g, inv.c
    gE = d - N + 1
    if gE < 0:
        raise GenusViolation(f"g(E) = d - N + 1 = {gE} < 0")
    if Fraction(N) > hodge_degree_bound(d, g):
        raise HodgeBoundViolation(f"N={N} exceeds 4d^2/(3d+g-1) = {hodge_degree_bound(d, g)}")
    num = 12 * N + 3 * g - 3 - 9 * d - c
    if num % 12:
        raise NonIntegralChi(f"chi(O_S) = {Fraction(num, 12)} is not an integer")
    p_a = num // 12
    K2 = 9 * N - 9 * d + g - 1
    euler = 3 * N + 2 * (g - 1) - c
    R2 = 3 * d + g - 1
    assert K2 + euler == 12 * p_a, "Noether formula"
    return MorphismInvariants(N=N, K2=K2, euler=euler, p_a=p_a, R2=R2, gE=gE)
