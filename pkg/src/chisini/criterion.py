"""Uniqueness threshold for generic covers and the fiber-product numerics.

For a curve with ``s = 3d + g - 1`` a second, non-equivalent generic cover
of degree ``N'`` can only exist when ``N' <= 4s / (2s - c)``.  The same
bound drops out of the Hodge index determinant on the normalised fiber
product, computed in :func:`fiber_product_numbers`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import DenominatorNotPositive, DomainError
from .invariants import CurveInvariants


@dataclass(frozen=True)
class ChisiniVerdict:
    N: int
    threshold: Fraction
    unique: bool
    max_competing_degree: int


@dataclass(frozen=True)
class FiberProductNumbers:
    Rtilde2: int
    C1tilde2: int
    C2tilde2: int
    RC: int
    hodge_det_1: int
    hodge_det_2: int


def uniqueness_threshold(d: int, g: int, c: int) -> Fraction:
    s = 3 * d + g - 1
    denom = 2 * s - c
    if denom <= 0:
        raise DenominatorNotPositive(f"2(3d+g-1) - c = {denom} <= 0; not a discriminant curve")
    return Fraction(4 * s, denom)


def chisini_check(inv: CurveInvariants, N: int) -> ChisiniVerdict:
    """Decide whether a degree-``N`` cover branched along ``inv`` is forced unique.

    Non-uniqueness is only possible for degrees ``<= threshold`` (inclusive),
    so ``max_competing_degree`` is ``floor(threshold)``.
    """
    t = uniqueness_threshold(inv.d, inv.g, inv.c)
    return ChisiniVerdict(N=N, threshold=t, unique=N > t, max_competing_degree=floor(t))


def fiber_product_numbers(inv: CurveInvariants, N1: int, N2: int) -> FiberProductNumbers:
    if N1 < 3 or N2 < 3:
        raise DomainError(f"fiber product needs N1, N2 >= 3; got {N1}, {N2}")
    s = inv.ramification_square
    c = inv.c
    r2 = 2 * s - c
    c1 = (N2 - 2) * s - c
    c2 = (N1 - 2) * s - c
    return FiberProductNumbers(
        Rtilde2=r2,
        C1tilde2=c1,
        C2tilde2=c2,
        RC=c,
        hodge_det_1=r2 * c1 - c * c,
        hodge_det_2=r2 * c2 - c * c,
    )


def uniqueness_guaranteed_by_genus(d: int, g: int) -> bool:
    """True when ``d > 3(g-1)``: then no second cover of degree >= 5 exists.

    The boundary ``d = 3(g-1)`` gives no guarantee.
    """
    return d > 3 * (g - 1)
