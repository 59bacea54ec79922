"""Fuzzy automorphisms of a single group and the group they form.

A fuzzy automorphism is a bijective fuzzy homomorphism from a group to
itself.  Composition laws, identity and inverses hold up to fuzzy-image
equality only, so the group structure lives on skeleton classes: each class
is the set of automorphisms sharing one skeleton permutation, and classes
compose through honest map composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import FuzzautError
from .groups import FiniteGroup, class_index, make_group
from .homs import is_fuzzy_homomorphism
from .maps import (
    FuzzyMap,
    compose_maps,
    identity_map,
    inverse_map,
    is_one_one,
    is_onto,
)


class AutomorphismError(FuzzautError):
    pass


class NotHomomorphism(AutomorphismError):
    pass


class NotInjective(AutomorphismError):
    pass


class NotSurjective(AutomorphismError):
    pass


class NotInner(AutomorphismError):
    pass


class ClosureViolation(RuntimeError):
    """A law-guaranteed closure failed; this is a library defect."""


@dataclass(frozen=True, repr=False)
class FuzzyAutomorphism:
    """Validated bijective fuzzy homomorphism with equal domain and codomain."""

    fmap: FuzzyMap

    @property
    def group(self) -> FiniteGroup:
        return self.fmap.domain

    @property
    def images(self) -> tuple[int, ...]:
        return self.fmap.images

    @property
    def grades(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.fmap.grades

    def __repr__(self) -> str:
        return f"FuzzyAutomorphism({self.group.name}, skeleton={self.images})"


def make_automorphism(f: FuzzyMap) -> FuzzyAutomorphism:
    """Validate and wrap, naming the failing predicate on rejection."""
    if f.domain != f.codomain:
        raise AutomorphismError("domain and codomain must be the same group")
    report = is_fuzzy_homomorphism(f)
    if not report:
        raise NotHomomorphism(str(report.witness))
    if not is_one_one(f):
        raise NotInjective(f"fuzzy images {f.images} repeat a value")
    if not is_onto(f):
        raise NotSurjective(f"fuzzy images {f.images} miss some element")
    return FuzzyAutomorphism(f)


def compose_aut(f: FuzzyAutomorphism, g: FuzzyAutomorphism) -> FuzzyAutomorphism:
    """f.g (g acts first), revalidated; closure failure aborts loudly."""
    if f.group != g.group:
        raise AutomorphismError("automorphisms of different groups cannot compose")
    composed = compose_maps(f.fmap, g.fmap)
    try:
        return make_automorphism(composed)
    except AutomorphismError as exc:
        raise ClosureViolation(
            f"composition of valid automorphisms failed validation: {exc}"
        ) from exc


def identity_aut(group: FiniteGroup) -> FuzzyAutomorphism:
    """Crisp indicator of the identity permutation."""
    return make_automorphism(identity_map(group))


def inverse_aut(f: FuzzyAutomorphism) -> FuzzyAutomorphism:
    """Transpose matrix, revalidated as an automorphism."""
    try:
        return make_automorphism(inverse_map(f.fmap))
    except AutomorphismError as exc:
        raise ClosureViolation(f"transpose of a valid automorphism failed: {exc}") from exc


def is_class_preserving(f: FuzzyAutomorphism) -> bool:
    """Every fuzzy image stays inside its argument's conjugacy class."""
    idx = class_index(f.group)
    return all(idx[f.images[x]] == idx[x] for x in f.group.elements)


def is_inner(f: FuzzyAutomorphism) -> Optional[int]:
    """Least g whose conjugation permutation equals the skeleton, if any."""
    group = f.group
    images = f.images
    for g in group.elements:
        if all(images[x] == group.conjugate(x, g) for x in group.elements):
            return g
    return None


def conjugate_aut(f: FuzzyAutomorphism, f_g: FuzzyAutomorphism) -> FuzzyAutomorphism:
    """inverse(f) . f_g . f; the result must be inner again."""
    if is_inner(f_g) is None:
        raise NotInner("conjugation requires an inner automorphism")
    result = compose_aut(inverse_aut(f), compose_aut(f_g, f))
    if is_inner(result) is None:
        raise ClosureViolation(
            f"conjugate of an inner automorphism lost innerness: skeleton {result.images}"
        )
    return result


@dataclass(frozen=True, repr=False)
class AutClass:
    """Skeleton class: canonical permutation plus one representative."""

    skeleton: tuple[int, ...]
    representative: FuzzyAutomorphism

    def __repr__(self) -> str:
        return f"AutClass{self.skeleton}"


def aut_classes(samples: Iterable[FuzzyAutomorphism]) -> tuple[AutClass, ...]:
    """Group samples by skeleton; classes sorted by their permutation."""
    by_skeleton: dict[tuple[int, ...], FuzzyAutomorphism] = {}
    for f in samples:
        by_skeleton.setdefault(f.images, f)
    return tuple(
        AutClass(sk, by_skeleton[sk]) for sk in sorted(by_skeleton)
    )


def build_aut_class_group(
    samples: Iterable[FuzzyAutomorphism],
) -> tuple[tuple[AutClass, ...], FiniteGroup]:
    """Cayley table on skeleton classes via honest composition of representatives.

    Representatives are taken as already certified; closure of the validity
    predicates under composition is the composition law's own check.  Raises
    if the sample set is not closed under composition; the table is validated
    as a group before returning.
    """
    classes = aut_classes(samples)
    if not classes:
        raise AutomorphismError("cannot build a group from zero samples")
    index = {c.skeleton: i for i, c in enumerate(classes)}
    table = []
    for a in classes:
        row = []
        for b in classes:
            sk = compose_maps(a.representative.fmap, b.representative.fmap).images
            if sk not in index:
                raise AutomorphismError(f"samples not closed under composition: {sk}")
            row.append(index[sk])
        table.append(row)
    group_name = classes[0].representative.group.name
    return classes, make_group(table, name=f"AutF({group_name})")
