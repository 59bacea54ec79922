"""Inner automorphisms induced by a normal pointed membership function.

For a group element g and a valid mu, the induced map grades the pair (x, y)
by mu(x^-1 * g * y * g^-1).  Its unit entries trace conjugation by g, the
family composes by reversed label product with exact matrix equality, and the
identity-labeled member acts as a two-sided identity.  Two structures sit on
top: the skeleton-class group (isomorphic to the quotient by the center) and
the label-indexed family targeted by the graded evaluation map.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import FuzzautError
from .groups import (
    ElementSubset,
    FiniteGroup,
    center,
    is_group_isomorphism,
    make_group,
    opposite_group,
    quotient_group,
)
from .homs import HomCheckReport, is_fuzzy_homomorphism
from .maps import (
    FuzzyMap,
    compose_maps,
    is_one_one,
    is_onto,
    make_fuzzy_map,
    pointwise_equal,
)
from .subsets import FuzzySubset, require_valid_mu


class MuMismatch(FuzzautError):
    pass


class LawViolation(RuntimeError):
    """An exact matrix law failed for validated inputs; a library defect."""


@dataclass(frozen=True, repr=False)
class InducedInner:
    """Labeled induced map: the label g, the membership function, the matrix."""

    label: int
    mu: FuzzySubset
    fmap: FuzzyMap

    @property
    def group(self) -> FiniteGroup:
        return self.mu.group

    def __repr__(self) -> str:
        return f"InducedInner(g={self.label}, group={self.group.name})"


def induced_grades(mu: FuzzySubset, g: int) -> tuple[tuple, ...]:
    """Raw grade matrix mu(x^-1 g y g^-1); no validity assumptions on mu."""
    group = mu.group
    t = group.table
    inv = group.inverses
    vec = mu.grades
    g_inv = inv[g]
    rows = []
    for x in group.elements:
        xi = inv[x]
        rows.append(tuple(vec[t[xi][t[t[g][y]][g_inv]]] for y in group.elements))
    return tuple(rows)


def induced_family_raw(group: FiniteGroup, mu: FuzzySubset) -> list[FuzzyMap]:
    """All labeled maps as validated fuzzy maps, with no law assertions."""
    return [
        make_fuzzy_map(group, group, induced_grades(mu, g)) for g in group.elements
    ]


@lru_cache(maxsize=None)
def make_induced(g: int, mu: FuzzySubset) -> InducedInner:
    """Construct and certify one induced inner automorphism.

    The membership function must be a normal fuzzy subgroup, pointed at the
    identity.  The finished map is asserted to be a bijective,
    class-preserving fuzzy homomorphism whose skeleton is conjugation by g;
    any failure here is a defect, not an input error.
    """
    require_valid_mu(mu)
    group = mu.group
    if not 0 <= g < group.order:
        raise FuzzautError(f"label {g} outside 0..{group.order - 1}")
    fmap = make_fuzzy_map(group, group, induced_grades(mu, g))
    conj = tuple(group.conjugate(x, g) for x in group.elements)
    if fmap.images != conj:
        raise LawViolation(f"skeleton {fmap.images} is not conjugation by {g}")
    report = is_fuzzy_homomorphism(fmap)
    if not report:
        raise LawViolation(f"induced map for label {g} is not a homomorphism: {report.witness}")
    if not (is_one_one(fmap) and is_onto(fmap)):
        raise LawViolation(f"induced map for label {g} is not bijective")
    return InducedInner(g, mu, fmap)


def compose_induced(a: InducedInner, b: InducedInner) -> InducedInner:
    """a.b = the map labeled by b.label * a.label, in exact matrix equality.

    The label shortcut is the law under test, so the result is checked
    pointwise against honest sup composition every time.
    """
    if a.mu != b.mu:
        raise MuMismatch("operands carry different membership functions")
    group = a.group
    result = make_induced(group.table[b.label][a.label], a.mu)
    honest = compose_maps(a.fmap, b.fmap)
    if not pointwise_equal(result.fmap, honest):
        raise LawViolation(
            f"label composition of ({a.label}, {b.label}) disagrees with sup composition"
        )
    return result


@lru_cache(maxsize=None)
def identity_induced(mu: FuzzySubset) -> InducedInner:
    """The identity-labeled member, mu(x^-1 y); a two-sided identity.

    Both one-sided identity laws are verified pointwise against the whole
    labeled family.
    """
    group = mu.group
    ident = make_induced(group.identity, mu)
    for g in group.elements:
        other = make_induced(g, mu)
        left = compose_maps(other.fmap, ident.fmap)
        right = compose_maps(ident.fmap, other.fmap)
        if not (pointwise_equal(left, other.fmap) and pointwise_equal(right, other.fmap)):
            raise LawViolation(f"identity law failed against label {g}")
    return ident


def inverse_induced(a: InducedInner) -> InducedInner:
    """The map labeled by the group inverse; both compositions give the identity."""
    result = make_induced(a.group.inverses[a.label], a.mu)
    ident = make_induced(a.group.identity, a.mu)
    if not pointwise_equal(compose_induced(a, result).fmap, ident.fmap):
        raise LawViolation(f"label {a.label}: a . a^-1 is not the identity matrix")
    if not pointwise_equal(compose_induced(result, a).fmap, ident.fmap):
        raise LawViolation(f"label {a.label}: a^-1 . a is not the identity matrix")
    return result


@dataclass(frozen=True, repr=False)
class InnGroup:
    """Skeleton classes of the labeled family with their Cayley table.

    ``classes`` partitions the labels (two labels agree exactly when they lie
    in the same coset of the center); ``table`` composes classes by reversed
    label product and is validated as a group.
    """

    group: FiniteGroup
    mu: FuzzySubset
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    table: FiniteGroup

    def __repr__(self) -> str:
        return f"InnGroup({self.group.name}, classes={len(self.classes)})"


@lru_cache(maxsize=None)
def build_inn_group(group: FiniteGroup, mu: FuzzySubset) -> InnGroup:
    """Quotient the labeled family by skeleton equality and build its table."""
    require_valid_mu(mu)
    family = induced_family_raw(group, mu)
    by_skeleton: dict[tuple[int, ...], list[int]] = {}
    for g, fmap in enumerate(family):
        by_skeleton.setdefault(fmap.images, []).append(g)
    classes = tuple(sorted((tuple(sorted(v)) for v in by_skeleton.values()), key=lambda c: c[0]))
    class_of = [0] * group.order
    for i, cls in enumerate(classes):
        for g in cls:
            class_of[g] = i
    z = center(group)
    if len(classes) * len(z) != group.order:
        raise LawViolation(
            f"{len(classes)} classes with a center of size {len(z)} in a group of order {group.order}"
        )
    reps = [cls[0] for cls in classes]
    table = [[class_of[group.table[g2][g1]] for g2 in reps] for g1 in reps]
    inn_table = make_group(table, name=f"InnF({group.name})")
    return InnGroup(group, mu, classes, tuple(class_of), inn_table)


@dataclass(frozen=True)
class ZetaCheck:
    """The label-to-class map g -> class(g^-1) with its verification facts."""

    inn: InnGroup
    images: tuple[int, ...]
    multiplicative: bool
    surjective: bool
    kernel: ElementSubset
    kernel_is_center: bool
    quotient: FiniteGroup
    coset_map: tuple[int, ...]
    induced_iso: Optional[tuple[int, ...]]
    isomorphism: bool

    @property
    def ok(self) -> bool:
        return (
            self.multiplicative
            and self.surjective
            and self.kernel_is_center
            and self.isomorphism
        )


def zeta(group: FiniteGroup, mu: FuzzySubset) -> ZetaCheck:
    """Map each g to the class of its inverse's label and verify the quotient law.

    The map is multiplicative onto the class table, its kernel is the center,
    and the map it induces on center cosets is a group isomorphism onto the
    class group.
    """
    inn = build_inn_group(group, mu)
    images = tuple(inn.class_of[group.inverses[g]] for g in group.elements)
    tz = inn.table.table
    multiplicative = all(
        images[group.table[a][b]] == tz[images[a]][images[b]]
        for a in group.elements
        for b in group.elements
    )
    surjective = set(images) == set(range(inn.table.order))
    kernel = ElementSubset.from_indices(
        group,
        (g for g in group.elements if images[g] == images[group.identity]),
    )
    z = center(group)
    kernel_is_center = kernel.mask == z.mask
    quotient, coset_map = quotient_group(group, z)
    induced: Optional[list[int]] = [None] * quotient.order  # type: ignore[list-item]
    for x in group.elements:
        c = coset_map[x]
        if induced[c] is None:
            induced[c] = images[x]
        elif induced[c] != images[x]:
            induced = None
            break
    iso = tuple(induced) if induced is not None and None not in induced else None
    isomorphism = iso is not None and is_group_isomorphism(quotient, inn.table, iso)
    return ZetaCheck(
        inn=inn,
        images=images,
        multiplicative=multiplicative,
        surjective=surjective,
        kernel=kernel,
        kernel_is_center=kernel_is_center,
        quotient=quotient,
        coset_map=coset_map,
        induced_iso=iso,
        isomorphism=isomorphism,
    )


@dataclass(frozen=True)
class ThetaCheck:
    """The graded evaluation map onto the label-indexed family.

    Labels compose by reversed product, so the codomain is the opposite
    group on the same indices; theta(a, label b) = mu(a^-1 * b^-1).
    """

    fmap: FuzzyMap
    label_group: FiniteGroup
    hom_report: HomCheckReport
    images_are_inverses: bool
    kernel: ElementSubset
    kernel_trivial: bool
    one_one: bool
    onto: bool

    @property
    def ok(self) -> bool:
        return (
            self.hom_report.verdict
            and self.images_are_inverses
            and self.kernel_trivial
            and self.one_one
            and self.onto
        )


def theta(group: FiniteGroup, mu: FuzzySubset) -> ThetaCheck:
    """Build and verify the graded evaluation map a -> label a^-1."""
    require_valid_mu(mu)
    labels = opposite_group(group)
    t = group.table
    inv = group.inverses
    rows = tuple(
        tuple(mu.grades[t[inv[a]][inv[b]]] for b in group.elements) for a in group.elements
    )
    fmap = make_fuzzy_map(group, labels, rows)
    images_ok = all(fmap.images[a] == inv[a] for a in group.elements)
    report = is_fuzzy_homomorphism(fmap)
    kernel = ElementSubset.from_indices(
        group, (a for a in group.elements if fmap.images[a] == labels.identity)
    )
    return ThetaCheck(
        fmap=fmap,
        label_group=labels,
        hom_report=report,
        images_are_inverses=images_ok,
        kernel=kernel,
        kernel_trivial=kernel.indices == (group.identity,),
        one_one=is_one_one(fmap),
        onto=is_onto(fmap),
    )
