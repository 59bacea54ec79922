"""Membership functions on a group, subgroup predicates, and generators.

A fuzzy subset assigns each element an exact rational grade.  The predicates
here are the module's source of truth; the generators never trust their own
construction and always re-certify through the predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import FuzzautError
from .grades import GRADE_ONE, grade
from .groups import (
    ElementSubset,
    FiniteGroup,
    class_index,
    derived_series,
    is_subgroup,
    normal_subgroups,
)


class SubsetError(FuzzautError):
    pass


class NotNested(SubsetError):
    pass


class NotSubgroup(SubsetError):
    pass


class GradesNotDecreasing(SubsetError):
    pass


class NotFuzzySubgroup(SubsetError):
    """Generator rejection; carries the violating witness."""


class MuNotNormal(SubsetError):
    pass


class MuNotPointed(SubsetError):
    pass


class StrategyInapplicable(SubsetError):
    pass


@dataclass(frozen=True)
class FuzzySubset:
    """Grade vector over a group's elements, callable as mu(x)."""

    group: FiniteGroup
    grades: tuple[Fraction, ...]

    def __call__(self, x: int) -> Fraction:
        return self.grades[x]


def fuzzy_subset(group: FiniteGroup, grades: Iterable) -> FuzzySubset:
    """Build a fuzzy subset, coercing and range-checking every grade."""
    vec = tuple(grade(g) for g in grades)
    if len(vec) != group.order:
        raise SubsetError(f"{len(vec)} grades for a group of order {group.order}")
    return FuzzySubset(group, vec)


@dataclass(frozen=True)
class SubgroupViolation:
    """First counterexample found by a membership predicate."""

    kind: str  # "product" | "inverse" | "symmetry"
    x: int
    y: Optional[int]
    lhs: Fraction
    rhs: Fraction

    def __str__(self) -> str:
        if self.kind == "product":
            return f"mu(x*y) = {self.lhs} < {self.rhs} = mu(x)^mu(y) at (x, y) = ({self.x}, {self.y})"
        if self.kind == "inverse":
            return f"mu(x^-1) = {self.lhs} < {self.rhs} = mu(x) at x = {self.x}"
        return f"mu(x*y) = {self.lhs} != {self.rhs} = mu(y*x) at (x, y) = ({self.x}, {self.y})"


def is_fuzzy_subgroup(mu: FuzzySubset) -> tuple[bool, Optional[SubgroupViolation]]:
    """mu(xy) >= mu(x) ^ mu(y) and mu(x^-1) >= mu(x); first witness on failure."""
    g = mu.group
    t = g.table
    vec = mu.grades
    for x in g.elements:
        gx = vec[x]
        row = t[x]
        for y in g.elements:
            gy = vec[y]
            bound = gx if gx < gy else gy
            if vec[row[y]] < bound:
                return False, SubgroupViolation("product", x, y, vec[row[y]], bound)
    for x in g.elements:
        if vec[g.inverses[x]] < vec[x]:
            return False, SubgroupViolation("inverse", x, None, vec[g.inverses[x]], vec[x])
    return True, None


def is_normal_fuzzy_subgroup(mu: FuzzySubset) -> tuple[bool, Optional[SubgroupViolation]]:
    """Fuzzy subgroup with mu(xy) = mu(yx) everywhere.

    Normality presupposes the subgroup inequalities, so those are checked
    first and their witness is forwarded on failure.
    """
    ok, witness = is_fuzzy_subgroup(mu)
    if not ok:
        return False, witness
    g = mu.group
    t = g.table
    vec = mu.grades
    for x in g.elements:
        for y in g.elements:
            if vec[t[x][y]] != vec[t[y][x]]:
                return False, SubgroupViolation("symmetry", x, y, vec[t[x][y]], vec[t[y][x]])
    return True, None


def is_class_constant(mu: FuzzySubset) -> bool:
    """Independent route to the symmetry condition: constant on conjugacy classes."""
    idx = class_index(mu.group)
    seen: dict[int, Fraction] = {}
    for x in mu.group.elements:
        c = idx[x]
        if c in seen:
            if seen[c] != mu.grades[x]:
                return False
        else:
            seen[c] = mu.grades[x]
    return True


def is_pointed(mu: FuzzySubset) -> bool:
    """Grade 1 is attained exactly at the identity."""
    e = mu.group.identity
    if mu.grades[e] != GRADE_ONE:
        return False
    return all(mu.grades[x] != GRADE_ONE for x in mu.group.elements if x != e)


def level_set(mu: FuzzySubset, threshold) -> ElementSubset:
    """Elements with grade at least the threshold."""
    t = grade(threshold)
    return ElementSubset.from_indices(
        mu.group, (x for x in mu.group.elements if mu.grades[x] >= t)
    )


def require_valid_mu(mu: FuzzySubset) -> None:
    """Entry gate for the graded-conjugation constructions."""
    ok, witness = is_normal_fuzzy_subgroup(mu)
    if not ok:
        raise MuNotNormal(str(witness))
    if not is_pointed(mu):
        raise MuNotPointed("grade 1 must be attained exactly at the identity")


# -- generators --------------------------------------------------------------


def _as_member_set(group: FiniteGroup, part) -> frozenset[int]:
    if isinstance(part, ElementSubset):
        return frozenset(part.indices)
    return frozenset(int(x) for x in part)


def gen_mu_chain(group: FiniteGroup, chain: Sequence, grades: Sequence) -> FuzzySubset:
    """Membership function from a nested subgroup chain with decreasing grades.

    ``chain[0]`` must be the trivial subgroup and the last term the whole
    group; mu(x) takes the grade of the first chain term containing x.  The
    output is certified through the predicates, not assumed.
    """
    sets = [_as_member_set(group, part) for part in chain]
    vals = [grade(g) for g in grades]
    if len(sets) != len(vals):
        raise SubsetError(f"{len(sets)} chain terms but {len(vals)} grades")
    if not sets or sets[0] != {group.identity}:
        raise NotNested("chain must start at the trivial subgroup {e}")
    if sets[-1] != frozenset(group.elements):
        raise NotNested("chain must end at the whole group")
    for i, s in enumerate(sets):
        if not is_subgroup(group, s):
            raise NotSubgroup(f"chain term {i} is not a subgroup")
        if i and not sets[i - 1] <= s:
            raise NotNested(f"chain term {i - 1} is not contained in term {i}")
    if vals[0] != GRADE_ONE:
        raise GradesNotDecreasing("first grade must be 1")
    if any(vals[i] <= vals[i + 1] for i in range(len(vals) - 1)):
        raise GradesNotDecreasing(f"grades must strictly decrease, got {vals}")
    vec = []
    for x in group.elements:
        vec.append(vals[next(i for i, s in enumerate(sets) if x in s)])
    mu = FuzzySubset(group, tuple(vec))
    ok, witness = is_fuzzy_subgroup(mu)
    assert ok, f"chain construction produced an invalid membership function: {witness}"
    assert is_pointed(mu)
    return mu


def gen_mu_class(group: FiniteGroup, class_grades: Sequence) -> FuzzySubset:
    """Membership function constant on conjugacy classes.

    ``class_grades`` is indexed by :func:`~fuzzaut.groups.conjugacy_classes`
    order.  Symmetry holds by construction; the subgroup inequalities do not,
    so the oracle runs and rejects bad assignments with its witness.
    """
    from .groups import conjugacy_classes

    classes = conjugacy_classes(group)
    vals = [grade(g) for g in class_grades]
    if len(vals) != len(classes):
        raise SubsetError(f"{len(vals)} grades for {len(classes)} conjugacy classes")
    for i, cls in enumerate(classes):
        if group.identity in cls:
            if vals[i] != GRADE_ONE:
                raise SubsetError("identity class must have grade 1")
        elif vals[i] == GRADE_ONE:
            raise SubsetError(f"non-identity class {i} must have grade < 1")
    vec = [None] * group.order
    for i, cls in enumerate(classes):
        for x in cls:
            vec[x] = vals[i]
    mu = FuzzySubset(group, tuple(vec))
    ok, witness = is_fuzzy_subgroup(mu)
    if not ok:
        raise NotFuzzySubgroup(str(witness))
    assert is_class_constant(mu)
    return mu


# -- canonical strategies ----------------------------------------------------


def _halving(k: int) -> list[Fraction]:
    return [Fraction(1, 2**i) for i in range(k)]


@lru_cache(maxsize=None)
def chain_strategy(group: FiniteGroup) -> FuzzySubset:
    """Canonical mu from a maximal chain of normal subgroups, grades 1, 1/2, ...

    The chain grows greedily: each step picks the normal subgroup of least
    order (ties broken by element tuple) strictly containing the current one,
    which makes consecutive terms adjacent in the normal-subgroup lattice.
    """
    normals = normal_subgroups(group)
    chain = [frozenset({group.identity})]
    full = frozenset(group.elements)
    while chain[-1] != full:
        ext = min(
            (s for s in normals if chain[-1] < s),
            key=lambda s: (len(s), tuple(sorted(s))),
        )
        chain.append(ext)
    return gen_mu_chain(group, chain, _halving(len(chain)))


@lru_cache(maxsize=None)
def class_strategy(group: FiniteGroup) -> FuzzySubset:
    """Canonical class-constant mu graded by depth in the derived series.

    mu(x) = 2^-(number of derived-series terms missing x); level sets are the
    derived subgroups, so validity is structural.  Requires the series to
    reach the trivial subgroup.
    """
    series = derived_series(group)
    if len(series[-1]) != 1:
        raise StrategyInapplicable(
            f"derived series of {group.name} does not reach the trivial subgroup"
        )
    from .groups import conjugacy_classes

    classes = conjugacy_classes(group)
    depth = len(series) - 1

    def grade_of(x: int) -> Fraction:
        deepest = max(k for k, term in enumerate(series) if x in term)
        return Fraction(1, 2 ** (depth - deepest))

    return gen_mu_class(group, [grade_of(cls[0]) for cls in classes])


_STRATEGIES = {"chain": chain_strategy, "class": class_strategy}


def mu_from_strategy(group: FiniteGroup, token: str) -> FuzzySubset:
    try:
        builder = _STRATEGIES[token]
    except KeyError:
        raise StrategyInapplicable(f"unknown strategy token {token!r}") from None
    return builder(group)


def flat_mu(group: FiniteGroup, value=1) -> FuzzySubset:
    """Constant membership function; the pointedness-ablation input."""
    return fuzzy_subset(group, [value] * group.order)
