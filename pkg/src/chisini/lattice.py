"""Subgroups of ``S_N1 x S_N2`` and the orbit of ``(1, 1)``.

For every subgroup ``G`` containing ``t = ((1 2), (1 2))`` whose projections
onto both factors are onto, the orbit of ``(1, 1)`` should have size
``N1 * N2`` unless ``N1 = N2`` and ``G`` is a diagonal
``{(x, s^-1 x s)}``.  :func:`verify_product_orbits` checks this by
enumerating the whole lattice of subgroups containing ``t``: start from
``<t>`` and repeatedly join with cyclic subgroups until nothing new appears.

Subgroups are stored as Python ints used as bitsets over element indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .errors import BudgetExceeded, DomainError
from .perm import Permutation, symmetric_group


class ProductGroup:
    """``S_N1 x S_N2`` with a full multiplication table."""

    def __init__(self, n1: int, n2: int):
        self.n1, self.n2 = n1, n2
        self.f1, self.f2 = symmetric_group(n1), symmetric_group(n2)
        idx1 = {p: i for i, p in enumerate(self.f1)}
        idx2 = {p: i for i, p in enumerate(self.f2)}
        m1 = [[idx1[x * y] for y in self.f1] for x in self.f1]
        m2 = [[idx2[x * y] for y in self.f2] for x in self.f2]
        k = len(self.f2)
        self.k = k
        self.order = len(self.f1) * k
        self.mul = [
            [m1[a // k][b // k] * k + m2[a % k][b % k] for b in range(self.order)]
            for a in range(self.order)
        ]
        self.identity = idx1[Permutation.identity(n1)] * k + idx2[Permutation.identity(n2)]
        self._idx1, self._idx2 = idx1, idx2

    def index(self, x: Permutation, y: Permutation) -> int:
        return self._idx1[x] * self.k + self._idx2[y]

    def pair(self, i: int) -> tuple[Permutation, Permutation]:
        return self.f1[i // self.k], self.f2[i % self.k]

    def power_closure(self, g: int) -> list[int]:
        out, x = [self.identity], g
        while x != self.identity:
            out.append(x)
            x = self.mul[x][g]
        return out

    def extend(self, elems: list[int], mask: int, gens: list[int], c: int) -> list[int]:
        """Elements of ``<H, c>`` as a union of right cosets ``H r``."""
        mul = self.mul
        out = list(elems)
        member = mask
        reps = [self.identity]
        all_gens = gens + [c]
        pos = 0
        while pos < len(reps):
            r = reps[pos]
            for s in all_gens:
                y = mul[r][s]
                if not (member >> y) & 1:
                    reps.append(y)
                    for h in elems:
                        z = mul[h][y]
                        out.append(z)
                        member |= 1 << z
            pos += 1
        return out


def _mask(elems) -> int:
    m = 0
    for x in elems:
        m |= 1 << x
    return m


@dataclass(frozen=True)
class QualifyingSubgroup:
    order: int
    generators: tuple[tuple[str, str], ...]
    kernel_types: tuple[str, str]
    origin_orbit: int
    orbit_sizes: tuple[int, ...]
    diagonal_conjugate: bool


@dataclass(frozen=True)
class ProductOrbitReport:
    N1: int
    N2: int
    group_order: int
    subgroups_containing_t: int
    qualifying: tuple[QualifyingSubgroup, ...]
    violations: tuple[QualifyingSubgroup, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def diagonal_count(self) -> int:
        return sum(1 for q in self.qualifying if q.diagonal_conjugate)

    def case_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for q in self.qualifying:
            key = f"{q.kernel_types[0]}/{q.kernel_types[1]}"
            out[key] = out.get(key, 0) + 1
        return dict(sorted(out.items()))


def subgroups_containing(pg: ProductGroup, t: int, budget: int = 200_000) -> list[tuple[list[int], list[int]]]:
    """Every subgroup containing ``t`` as ``(elements, generators)``."""
    seeds, seen_cyclic = [], set()
    for g in range(pg.order):
        cyc = _mask(pg.power_closure(g))
        if cyc not in seen_cyclic:
            seen_cyclic.add(cyc)
            seeds.append((g, cyc))
    start = pg.power_closure(t)
    known = {_mask(start): (start, [t])}
    queue = [_mask(start)]
    pos = 0
    while pos < len(queue):
        hmask = queue[pos]
        pos += 1
        elems, gens = known[hmask]
        for c, cyc in seeds:
            if cyc & ~hmask == 0:
                continue
            new = pg.extend(elems, hmask, gens, c)
            nmask = _mask(new)
            if nmask not in known:
                known[nmask] = (new, gens + [c])
                queue.append(nmask)
                if len(known) > budget:
                    raise BudgetExceeded(f"more than {budget} subgroups")
    return [known[m] for m in queue]


def _kernel_type(kernel: set[Permutation], n: int) -> str:
    size = len(kernel)
    if size == factorial(n):
        return "S"
    if size == factorial(n) // 2 and n > 1:
        return "A"
    if size == 1:
        return "1"
    if n == 4 and size == 4:
        return "K4"
    return f"order{size}"


def _orbit_sizes(pairs, n1: int, n2: int) -> tuple[int, ...]:
    left = {(i, j) for i in range(n1) for j in range(n2)}
    sizes = []
    while left:
        i, j = min(left)
        orb = {(x.images[i], y.images[j]) for x, y in pairs}
        sizes.append(len(orb))
        left -= orb
    return tuple(sorted(sizes))


def _is_diagonal_conjugate(pairs, n: int) -> bool:
    if len(pairs) != factorial(n):
        return False
    return any(all(y == x.conjugate(s) for x, y in pairs) for s in symmetric_group(n))


def verify_product_orbits(N1: int, N2: int, budget: int = 200_000) -> ProductOrbitReport:
    """Check the orbit-of-(1,1) statement over the full subgroup lattice."""
    if N1 < 3 or N2 < 3:
        raise DomainError(f"need N1, N2 >= 3; got {N1}, {N2}")
    if factorial(N1) * factorial(N2) > 1000:
        raise BudgetExceeded(f"|S_{N1} x S_{N2}| = {factorial(N1) * factorial(N2)} is too large")
    pg = ProductGroup(N1, N2)
    t = pg.index(Permutation.from_cycles(N1, (1, 2)), Permutation.from_cycles(N2, (1, 2)))
    subgroups = subgroups_containing(pg, t, budget)
    e1, e2 = Permutation.identity(N1), Permutation.identity(N2)
    qualifying, violations = [], []
    for elems, gens in subgroups:
        pairs = [pg.pair(i) for i in elems]
        if len({x for x, _ in pairs}) != factorial(N1) or len({y for _, y in pairs}) != factorial(N2):
            continue
        h1 = {x for x, y in pairs if y == e2}
        h2 = {y for x, y in pairs if x == e1}
        sizes = _orbit_sizes(pairs, N1, N2)
        origin = len({(x.images[0], y.images[0]) for x, y in pairs})
        diag = N1 == N2 and _is_diagonal_conjugate(pairs, N1)
        q = QualifyingSubgroup(
            order=len(elems),
            generators=tuple((str(a), str(b)) for a, b in (pg.pair(g) for g in gens)),
            kernel_types=(_kernel_type(h1, N1), _kernel_type(h2, N2)),
            origin_orbit=origin,
            orbit_sizes=sizes,
            diagonal_conjugate=diag,
        )
        qualifying.append(q)
        expected = (N1, N1 * (N1 - 1)) if diag else None
        if (diag and sizes != expected) or (not diag and origin != N1 * N2):
            violations.append(q)
    qualifying.sort(key=lambda q: (-q.order, q.kernel_types, q.generators))
    return ProductOrbitReport(N1, N2, pg.order, len(subgroups), tuple(qualifying), tuple(violations))
