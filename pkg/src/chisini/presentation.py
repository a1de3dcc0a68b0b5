"""Marked presentations and the search for admissible monodromy.

A generic cover of degree ``N`` branched along ``B`` corresponds to a
conjugacy class of epimorphisms ``pi_1(P^2 - B) -> S_N`` sending geometric
generators to transpositions, each cusp pair to two transpositions that
generate ``S_3`` and each node pair to two commuting transpositions.
:func:`enumerate_admissible` finds them all by brute force for a user
supplied presentation.

Presentation files are YAML::

    generators: [a, b]
    relators:
      - a b a b' a' b'        # or "a b a = b a b"
    geometric: [a, b]         # words mapped to transpositions
    cusps:
      - [a, b]
    nodes: []

Words are space-separated generator names, ``'`` marks an inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import factorial, prod
from pathlib import Path
from typing import Sequence

import yaml

from .errors import BudgetExceeded, PresentationError
from .invariants import Check
from .perm import (
    Permutation,
    Word,
    action_on_orbit,
    evaluate_word,
    format_word,
    is_transitive,
    pair_action_orbit_sets,
    subgroup_closure,
    symmetric_group,
    tokenize_word,
    transpositions,
)

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class MarkedPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    geometric: tuple[Word, ...] = ()
    cusps: tuple[tuple[Word, Word], ...] = ()
    nodes: tuple[tuple[Word, Word], ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.generators)) != len(self.generators) or not self.generators:
            raise PresentationError(f"generator names must be distinct and non-empty: {self.generators}")
        k = len(self.generators)
        words = list(self.relators) + list(self.geometric)
        words += [w for pair in self.cusps + self.nodes for w in pair]
        for w in words:
            if any(not 0 <= i < k or e not in (1, -1) for i, e in w):
                raise PresentationError(f"word {w} uses undeclared generators")

    @property
    def geometric_generators(self) -> set[int]:
        """Generators that are themselves listed as geometric words."""
        return {w[0][0] for w in self.geometric if len(w) == 1 and w[0][1] == 1}

    def to_dict(self) -> dict:
        fw = lambda w: format_word(w, self.generators)  # noqa: E731
        return {
            "generators": list(self.generators),
            "relators": [fw(w) for w in self.relators],
            "geometric": [fw(w) for w in self.geometric],
            "cusps": [[fw(u), fw(v)] for u, v in self.cusps],
            "nodes": [[fw(u), fw(v)] for u, v in self.nodes],
        }


def _relator(text: str, gens: Sequence[str]) -> Word:
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        left, right = tokenize_word(lhs, gens), tokenize_word(rhs, gens)
        return left + tuple((i, -e) for i, e in reversed(right))
    return tokenize_word(text, gens)


def _pairs(raw, gens, what: str) -> tuple[tuple[Word, Word], ...]:
    out = []
    for item in raw or []:
        if isinstance(item, str):
            item = item.split(",")
        if len(item) != 2:
            raise PresentationError(f"each {what} entry needs exactly two words, got {item!r}")
        out.append((tokenize_word(str(item[0]), gens), tokenize_word(str(item[1]), gens)))
    return tuple(out)


def parse_presentation(data: dict) -> MarkedPresentation:
    if not isinstance(data, dict) or "generators" not in data:
        raise PresentationError("presentation needs a 'generators' field")
    unknown = set(data) - {"generators", "relators", "geometric", "cusps", "nodes", "name"}
    if unknown:
        raise PresentationError(f"unknown fields {sorted(unknown)}")
    gens = data["generators"]
    if isinstance(gens, str):
        gens = gens.split()
    gens = tuple(str(g) for g in gens)
    if any(not g or "'" in g or " " in g for g in gens):
        raise PresentationError(f"bad generator names {gens}")
    return MarkedPresentation(
        generators=gens,
        relators=tuple(_relator(str(r), gens) for r in data.get("relators") or []),
        geometric=tuple(tokenize_word(str(w), gens) for w in data.get("geometric") or []),
        cusps=_pairs(data.get("cusps"), gens, "cusps"),
        nodes=_pairs(data.get("nodes"), gens, "nodes"),
    )


def load_presentation(path: str | Path) -> MarkedPresentation:
    try:
        data = yaml.safe_load(Path(path).read_text())
    except yaml.YAMLError as exc:
        raise PresentationError(f"{path}: {exc}") from exc
    return parse_presentation(data)


BRAID3 = parse_presentation(
    {"generators": ["a", "b"], "relators": ["a b a = b a b"], "geometric": ["a", "b"], "cusps": [["a", "b"]]}
)


@dataclass(frozen=True)
class HomomorphismClass:
    generator_images: tuple[Permutation, ...]
    N: int
    canonical: bool = True
    class_size: int = 1

    def describe(self, generators: Sequence[str]) -> dict[str, str]:
        return {g: str(p) for g, p in zip(generators, self.generator_images)}


def canonical_form(images: Sequence[Permutation]) -> tuple[Permutation, ...]:
    """Lexicographically least simultaneous conjugate (by one-line notation)."""
    n = images[0].degree
    return min(tuple(p.conjugate(s) for p in images) for s in symmetric_group(n))


def is_s3_pair(p: Permutation, q: Permutation) -> bool:
    """Two transpositions that do not commute and generate a group of order 6."""
    return (
        p.is_transposition()
        and q.is_transposition()
        and p * q != q * p
        and p * q * p == q * p * q
        and len(subgroup_closure([p, q])) == 6
    )


def is_node_pair(p: Permutation, q: Permutation) -> bool:
    return p.is_transposition() and q.is_transposition() and p != q and p * q == q * p


def local_conditions(pres: MarkedPresentation, images: Sequence[Permutation]) -> bool:
    n = images[0].degree
    ev = lambda w: evaluate_word(images, w, n)  # noqa: E731
    return (
        all(ev(r).is_identity() for r in pres.relators)
        and all(ev(w).is_transposition() for w in pres.geometric)
        and all(is_s3_pair(ev(u), ev(v)) for u, v in pres.cusps)
        and all(is_node_pair(ev(u), ev(v)) for u, v in pres.nodes)
    )


def enumerate_admissible(
    pres: MarkedPresentation,
    N: int,
    *,
    budget: int = DEFAULT_BUDGET,
    require_epimorphism: bool = True,
) -> list[HomomorphismClass]:
    """All conjugacy classes of admissible monodromy maps to ``S_N``.

    Geometric generators only range over transpositions; the others over
    all of ``S_N``.  With ``require_epimorphism`` the generated subgroup must
    be the whole symmetric group (checked by closure, not by transitivity).
    """
    if N < 2:
        raise ValueError(f"need N >= 2, got {N}")
    geo = pres.geometric_generators
    trans, full = transpositions(N), None
    candidates = []
    for i in range(len(pres.generators)):
        if i in geo:
            candidates.append(trans)
        else:
            full = full or symmetric_group(N)
            candidates.append(full)
    size = prod(len(c) for c in candidates)
    if size > budget:
        raise BudgetExceeded(f"{size} image assignments exceed the budget of {budget}")

    group = symmetric_group(N)
    seen: set[tuple[Permutation, ...]] = set()
    classes = []
    # sliced by the image of the first generator
    for first in candidates[0]:
        for rest in product(*candidates[1:]):
            images = (first,) + rest
            if images in seen or not local_conditions(pres, images):
                continue
            orbit = {tuple(p.conjugate(s) for p in images) for s in group}
            seen |= orbit
            if require_epimorphism and len(subgroup_closure(images)) != factorial(N):
                continue
            classes.append(HomomorphismClass(min(orbit), N, True, len(orbit)))
    return sorted(classes, key=lambda h: h.generator_images)


STANDARD_CUSP_IMAGES = (Permutation.parse(3, "(1 2)"), Permutation.parse(3, "(2 3)"))


@dataclass(frozen=True)
class SuiteReport:
    items: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(i.passed for i in self.items)

    def __getitem__(self, name: str) -> Check:
        for item in self.items:
            if item.name == name:
                return item
        raise KeyError(name)


def local_model_suite(a_image: Permutation | None = None, b_image: Permutation | None = None) -> SuiteReport:
    """Checks on the local three-sheeted model over a cusp.

    By default ``a -> (1 2)``, ``b -> (2 3)``; other images can be supplied to
    see which checks break.
    """
    a = a_image or STANDARD_CUSP_IMAGES[0]
    b = b_image or STANDARD_CUSP_IMAGES[1]
    imgs = (a, b)
    items = []

    items.append(Check("braid_relation", a * b * a == b * a * b, f"aba={a * b * a}, bab={b * a * b}"))
    items.append(Check("cusp_generates_s3", is_s3_pair(a, b), f"|<a,b>| = {len(subgroup_closure(imgs))}"))
    items.append(Check("transitive", is_transitive(imgs, 3), "image transitive on {1,2,3}"))

    classes = enumerate_admissible(BRAID3, 3)
    items.append(Check("single_class", len(classes) == 1, f"{len(classes)} admissible class(es) in S3"))
    in_class = bool(classes) and local_conditions(BRAID3, imgs) and canonical_form(imgs) == classes[0].generator_images
    items.append(Check("conjugate_to_standard", in_class, "images conjugate to a->(1 2), b->(2 3)"))

    orbit_sets = pair_action_orbit_sets(imgs, imgs)
    sizes = sorted(len(o) for o in orbit_sets)
    items.append(Check("pair_orbits", sizes == [3, 6], f"orbit sizes {sizes}"))

    big = [o for o in orbit_sets if len(o) == 6]
    regular = False
    fibers_ok = False
    if len(big) == 1:
        act = action_on_orbit(imgs, imgs, big[0])
        grp = subgroup_closure(act)
        regular = is_transitive(act, 6) and len(grp) == 6 and all(
            p.is_identity() or p.moved() == 6 for p in grp
        )
        # (i, j) -> i is equivariant and two-to-one onto {1,2,3}
        firsts = [i for i, _ in big[0]]
        fibers_ok = sorted(firsts.count(i) for i in set(firsts)) == [2, 2, 2]
    items.append(Check("regular_degree_6", regular, "orbit of (1,2) carries the regular action of S3"))
    items.append(Check("degree_2_projection", fibers_ok, "projection of the 6-orbit to the first factor is 2:1"))
    return SuiteReport(tuple(items))
