"""Small permutation-group toolkit.

Permutations act on the right: ``(p * q)(i) = q(p(i))``, so a word is
evaluated left to right.  Points are stored 0-based; everything printed
or parsed by users is 1-based cycle notation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .errors import IndexOutOfRange, PresentationError


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_one_line(cls, one_line: Sequence[int]) -> "Permutation":
        """From 1-based one-line notation, e.g. ``(2, 1, 3)``."""
        return cls(tuple(i - 1 for i in one_line))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        """From 1-based cycles: ``Permutation.from_cycles(3, (1, 2))``."""
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            pts = [i - 1 for i in cyc]
            if any(p < 0 or p >= n for p in pts) or seen & set(pts) or len(set(pts)) != len(pts):
                raise ValueError(f"bad cycle {cyc} for degree {n}")
            seen |= set(pts)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a] = b
        return cls(tuple(img))

    @classmethod
    def parse(cls, n: int, text: str) -> "Permutation":
        """Parse cycle notation like ``(1 2)(3 4)``, ``(1,2)`` or ``()``."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))+", text):
            raise ValueError(f"cannot parse permutation {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if len(pts) > 1:
                cycles.append(pts)
        return cls.from_cycles(n, *cycles)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        o = other.images
        return Permutation(tuple(o[i] for i in self.images))

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def conjugate(self, by: "Permutation") -> "Permutation":
        """``by^-1 * self * by``: relabel points through ``by``."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def moved(self) -> int:
        return sum(1 for i, j in enumerate(self.images) if i != j)

    def is_transposition(self) -> bool:
        # two moved points swapped with each other
        return self.moved() == 2 and (self * self).is_identity()

    def one_line(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc, j = [], start
            while j not in seen:
                seen.add(j)
                cyc.append(j + 1)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) if cyc else "()"


def symmetric_group(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(n))]


def transpositions(n: int) -> list[Permutation]:
    return [Permutation.from_cycles(n, (i, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


Word = tuple[tuple[int, int], ...]


def tokenize_word(text: str, generators: Sequence[str]) -> Word:
    """Turn ``"a b a b' a'"`` (or compact ``"aba"``) into ``((0, 1), (1, 1), ...)``.

    A trailing ``'`` marks an inverse.  A token that is not a generator name
    is split into single characters when all of them are generator names.
    """
    index = {name: i for i, name in enumerate(generators)}
    word: list[tuple[int, int]] = []
    for tok in text.split():
        if tok in index:
            word.append((index[tok], 1))
            continue
        if tok.endswith("'") and tok[:-1] in index:
            word.append((index[tok[:-1]], -1))
            continue
        parts = re.findall(r"[^']'?", tok)
        if not parts or "".join(parts) != tok or any(p.rstrip("'") not in index for p in parts):
            raise PresentationError(f"unknown generator in token {tok!r} (generators: {list(generators)})")
        word.extend((index[p.rstrip("'")], -1 if p.endswith("'") else 1) for p in parts)
    return tuple(word)


def format_word(word: Word, generators: Sequence[str]) -> str:
    return " ".join(generators[i] + ("'" if e < 0 else "") for i, e in word)


def evaluate_word(images: Sequence[Permutation] | Mapping[str, Permutation], word, degree: int | None = None) -> Permutation:
    """Image of a word, composing generator images left to right.

    ``images`` is a sequence indexed by generator number or a name mapping;
    ``word`` is a tuple of ``(index, +-1)`` pairs or a string of names.
    """
    if isinstance(images, Mapping):
        names = list(images)
        seq = [images[k] for k in names]
        if isinstance(word, str):
            word = tokenize_word(word, names)
    else:
        seq = list(images)
        if isinstance(word, str):
            raise TypeError("string words need a name -> image mapping")
    if degree is None:
        if not seq:
            raise ValueError("cannot infer the degree of an empty image list")
        degree = seq[0].degree
    result = Permutation.identity(degree)
    for idx, exp in word:
        if not 0 <= idx < len(seq):
            raise IndexOutOfRange(f"generator index {idx} outside 0..{len(seq) - 1}")
        p = seq[idx]
        result = result * (p if exp > 0 else p.inverse())
    return result


def subgroup_closure(gens: Iterable[Permutation], degree: int | None = None) -> frozenset[Permutation]:
    """All elements of the subgroup generated by ``gens`` (breadth-first)."""
    gens = list(gens)
    if not gens:
        if degree is None:
            raise ValueError("degree needed for the trivial subgroup")
        return frozenset({Permutation.identity(degree)})
    e = Permutation.identity(gens[0].degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = x * s
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def orbits(gens: Sequence[Permutation], n: int) -> list[frozenset[int]]:
    """Orbits on ``{1..n}`` of the group generated by ``gens``."""
    left = set(range(1, n + 1))
    out = []
    while left:
        start = min(left)
        orb, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for s in gens:
                y = s(x)
                if y not in orb:
                    orb.add(y)
                    stack.append(y)
        out.append(frozenset(orb))
        left -= orb
    return out


def is_transitive(gens: Sequence[Permutation], n: int) -> bool:
    return len(orbits(gens, n)) == 1


def pair_action_orbit_sets(imgs1: Sequence[Permutation], imgs2: Sequence[Permutation]) -> list[frozenset[tuple[int, int]]]:
    """Orbits of the diagonal action ``w -> (phi1(w), phi2(w))`` on pairs (1-based)."""
    if len(imgs1) != len(imgs2):
        raise ValueError("both image lists must be over the same generators")
    if not imgs1:
        raise ValueError("need at least one generator")
    n1, n2 = imgs1[0].degree, imgs2[0].degree
    pairs = list(zip(imgs1, imgs2))
    left = {(i, j) for i in range(1, n1 + 1) for j in range(1, n2 + 1)}
    out = []
    while left:
        start = min(left)
        orb, stack = {start}, [start]
        while stack:
            i, j = stack.pop()
            for p, q in pairs:
                y = (p(i), q(j))
                if y not in orb:
                    orb.add(y)
                    stack.append(y)
        out.append(frozenset(orb))
        left -= orb
    return out


def pair_action_orbits(imgs1: Sequence[Permutation], imgs2: Sequence[Permutation]) -> list[int]:
    """Sorted orbit sizes of the diagonal action on ``{1..N1} x {1..N2}``."""
    return sorted(len(o) for o in pair_action_orbit_sets(imgs1, imgs2))


def action_on_orbit(imgs1: Sequence[Permutation], imgs2: Sequence[Permutation], orbit: Iterable[tuple[int, int]]) -> list[Permutation]:
    """Permutation images of the pair action restricted to one orbit.

    Orbit points are numbered in sorted order.
    """
    pts = sorted(orbit)
    pos = {p: i for i, p in enumerate(pts)}
    return [Permutation(tuple(pos[(p(i), q(j))] for i, j in pts)) for p, q in zip(imgs1, imgs2)]


# the three splittings of {1,2,3,4} into two pairs, 0-based
_PAIR_SPLITTINGS = (
    frozenset({frozenset({0, 1}), frozenset({2, 3})}),
    frozenset({frozenset({0, 2}), frozenset({1, 3})}),
    frozenset({frozenset({0, 3}), frozenset({1, 2})}),
)


def quotient_s4_to_s3(p: Permutation | Sequence[Permutation]):
    """The epimorphism ``S4 -> S3`` with kernel the Klein four group.

    Realised as the action on the three splittings ``12|34``, ``13|24``,
    ``14|23`` (numbered 1, 2, 3).  Accepts one permutation or a sequence.
    """
    if not isinstance(p, Permutation):
        return [quotient_s4_to_s3(x) for x in p]
    if p.degree != 4:
        raise ValueError(f"expected an element of S4, got degree {p.degree}")
    img = []
    for split in _PAIR_SPLITTINGS:
        moved = frozenset(frozenset(p.images[i] for i in block) for block in split)
        img.append(_PAIR_SPLITTINGS.index(moved))
    return Permutation(tuple(img))


KLEIN_FOUR = tuple(
    Permutation.parse(4, s) for s in ("()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)")
)
