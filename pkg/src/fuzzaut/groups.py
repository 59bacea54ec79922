"""Finite groups as dense Cayley tables over element indices 0..n-1.

Everything in this library is table driven: a group of order n is an n x n
array ``table`` with ``table[a][b]`` the index of the product ``a*b``.  The
builtin families come with fixed element orderings (documented on
:func:`builtin_group`) so grade vectors stored in files stay portable.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import FuzzautError


class GroupError(FuzzautError):
    """Base class for Cayley-table validation failures."""


class NotLatinSquare(GroupError):
    pass


class NotAssociative(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class UnknownGroup(GroupError):
    pass


class GroupTooLarge(GroupError):
    pass


class NotNormal(GroupError):
    pass


@dataclass(frozen=True, repr=False)
class FiniteGroup:
    """Validated group: order, Cayley table, identity and inverse table."""

    name: str
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conjugate(self, x: int, a: int) -> int:
        """a^-1 * x * a."""
        t = self.table
        return t[t[self.inverses[a]][x]][a]

    @property
    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements for b in self.elements)

    def element_order(self, x: int) -> int:
        k, acc = 1, x
        while acc != self.identity:
            acc = self.table[acc][x]
            k += 1
        return k

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


@dataclass(frozen=True, repr=False)
class ElementSubset:
    """Subset of a group's elements, stored as a bitmask."""

    group: FiniteGroup
    mask: int

    @classmethod
    def from_indices(cls, group: FiniteGroup, indices: Iterable[int]) -> "ElementSubset":
        mask = 0
        for i in indices:
            if not 0 <= i < group.order:
                raise GroupError(f"element index {i} outside 0..{group.order - 1}")
            mask |= 1 << i
        return cls(group, mask)

    def __contains__(self, x: int) -> bool:
        return (self.mask >> x) & 1 == 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self):
        return iter(self.indices)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in self.group.elements if (self.mask >> i) & 1)

    def __repr__(self) -> str:
        return f"ElementSubset({self.group.name}, {{{', '.join(map(str, self.indices))}}})"


def make_group(table: Sequence[Sequence[int]], name: Optional[str] = None) -> FiniteGroup:
    """Validate a Cayley table and return the finished group.

    Validation order is part of the error contract: associativity is checked
    before the Latin-square structure so a corrupted product cell surfaces as
    the algebraic violation it causes, naming the first offending tuple.
    """
    rows = tuple(tuple(int(v) for v in row) for row in table)
    n = len(rows)
    if n == 0:
        raise NotLatinSquare("empty table")
    for r, row in enumerate(rows):
        if len(row) != n:
            raise NotLatinSquare(f"row {r} has length {len(row)}, expected {n}")
        for c, v in enumerate(row):
            if not 0 <= v < n:
                raise NotLatinSquare(f"entry at row {r}, column {c} is {v}, outside 0..{n - 1}")
    for a in range(n):
        row_a = rows[a]
        for b in range(n):
            ab = row_a[b]
            row_ab = rows[ab]
            row_b = rows[b]
            for c in range(n):
                if row_ab[c] != row_a[row_b[c]]:
                    raise NotAssociative(f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")
    identity = None
    for e in range(n):
        if all(rows[e][a] == a and rows[a][e] == a for a in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")
    inverses = []
    for a in range(n):
        b = next((b for b in range(n) if rows[a][b] == identity and rows[b][a] == identity), None)
        if b is None:
            raise NoInverse(f"element {a} has no two-sided inverse")
        inverses.append(b)
    full = list(range(n))
    for r in range(n):
        if sorted(rows[r]) != full:
            raise NotLatinSquare(f"row {r} is not a permutation of 0..{n - 1}")
        if sorted(rows[a][r] for a in range(n)) != full:
            raise NotLatinSquare(f"column {r} is not a permutation of 0..{n - 1}")
    return FiniteGroup(name or f"G{n}", n, rows, identity, tuple(inverses))


# -- builtin families -------------------------------------------------------

_CYCLIC_MAX = 16
_DIHEDRAL_MAX = 8
_SYMMETRIC_MAX = 4

_ALIAS_RE = re.compile(r"^([ZzDdSs])(\d+)$")
_CALL_RE = re.compile(r"^(cyclic|dihedral|symmetric)\((\d+)\)$")


def _cyclic_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def _dihedral_table(n: int) -> list[list[int]]:
    # element r^i s^j has index 2*i + j; s r^k = r^-k s
    def mul(i, j, k, l):
        return ((i + (k if j == 0 else -k)) % n) * 2 + (j + l) % 2

    return [[mul(a // 2, a % 2, b // 2, b % 2) for b in range(2 * n)] for a in range(2 * n)]


def _symmetric_table(n: int) -> list[list[int]]:
    # one-line permutations in lexicographic order; (p*q)(x) = p(q(x))
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]


_QUAT_AXIS = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)
_QUAT_SIGN = (
    (1, 1, 1, 1),
    (1, -1, 1, -1),
    (1, -1, -1, 1),
    (1, 1, -1, -1),
)


def _quaternion_table() -> list[list[int]]:
    # ordering 1, -1, i, -i, j, -j, k, -k: index = 2*axis + (0 if positive)
    def mul(a, b):
        ax, sa = a // 2, -1 if a % 2 else 1
        bx, sb = b // 2, -1 if b % 2 else 1
        sign = sa * sb * _QUAT_SIGN[ax][bx]
        return 2 * _QUAT_AXIS[ax][bx] + (0 if sign > 0 else 1)

    return [[mul(a, b) for b in range(8)] for a in range(8)]


def _direct_table(g1: FiniteGroup, g2: FiniteGroup) -> list[list[int]]:
    n2 = g2.order

    def mul(a, b):
        return g1.table[a // n2][b // n2] * n2 + g2.table[a % n2][b % n2]

    order = g1.order * n2
    return [[mul(a, b) for b in range(order)] for a in range(order)]


def _split_product_args(body: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1 :]
    raise UnknownGroup(f"direct_product needs two comma-separated factors, got {body!r}")


@lru_cache(maxsize=None)
def builtin_group(token: str) -> FiniteGroup:
    """Build a named group from its token.

    Supported tokens (with the fixed element orderings):

    * ``cyclic(n)`` / ``Zn`` for n <= 16 -- residues 0..n-1.
    * ``dihedral(n)`` / ``Dn`` for n <= 8 -- r^i s^j ordered by (i, j).
    * ``symmetric(n)`` / ``Sn`` for n <= 4 -- one-line permutations in
      lexicographic order, product (p*q)(x) = p(q(x)).
    * ``quaternion8`` / ``Q8`` -- 1, -1, i, -i, j, -j, k, -k.
    * ``klein4`` / ``V4`` -- pairs (0,0), (0,1), (1,0), (1,1) over Z2 x Z2.
    * ``direct_product(a,b)`` -- row-major pairs over the two factors.
    """
    tok = token.strip()
    m = _ALIAS_RE.match(tok)
    if m:
        letter, n = m.group(1).upper(), int(m.group(2))
        tok = {"Z": f"cyclic({n})", "D": f"dihedral({n})", "S": f"symmetric({n})"}[letter]
    if tok in ("Q8", "q8"):
        tok = "quaternion8"
    if tok in ("V4", "v4"):
        tok = "klein4"

    m = _CALL_RE.match(tok)
    if m:
        family, n = m.group(1), int(m.group(2))
        if family == "cyclic":
            if not 1 <= n <= _CYCLIC_MAX:
                raise UnknownGroup(f"cyclic({n}) outside supported range 1..{_CYCLIC_MAX}")
            return make_group(_cyclic_table(n), name=f"Z{n}")
        if family == "dihedral":
            if not 1 <= n <= _DIHEDRAL_MAX:
                raise UnknownGroup(f"dihedral({n}) outside supported range 1..{_DIHEDRAL_MAX}")
            return make_group(_dihedral_table(n), name=f"D{n}")
        if not 1 <= n <= _SYMMETRIC_MAX:
            raise UnknownGroup(f"symmetric({n}) outside supported range 1..{_SYMMETRIC_MAX}")
        return make_group(_symmetric_table(n), name=f"S{n}")
    if tok == "quaternion8":
        return make_group(_quaternion_table(), name="Q8")
    if tok == "klein4":
        z2 = builtin_group("cyclic(2)")
        return make_group(_direct_table(z2, z2), name="V4")
    if tok.startswith("direct_product(") and tok.endswith(")"):
        left, right = _split_product_args(tok[len("direct_product(") : -1])
        g1, g2 = builtin_group(left), builtin_group(right)
        return make_group(_direct_table(g1, g2), name=f"{g1.name}x{g2.name}")
    raise UnknownGroup(f"unrecognized group token {token!r}")


# -- structural subsets -----------------------------------------------------


@lru_cache(maxsize=None)
def center(group: FiniteGroup) -> ElementSubset:
    """Elements commuting with everything."""
    t = group.table
    members = [z for z in group.elements if all(t[z][x] == t[x][z] for x in group.elements)]
    return ElementSubset.from_indices(group, members)


@lru_cache(maxsize=None)
def conjugacy_classes(group: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Partition of the elements into conjugation orbits, sorted by least member."""
    seen = set()
    classes = []
    for x in group.elements:
        if x in seen:
            continue
        orbit = {group.conjugate(x, a) for a in group.elements}
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: c[0])
    return tuple(classes)


@lru_cache(maxsize=None)
def class_index(group: FiniteGroup) -> tuple[int, ...]:
    """For each element, the index of its conjugacy class."""
    out = [0] * group.order
    for i, cls in enumerate(conjugacy_classes(group)):
        for x in cls:
            out[x] = i
    return tuple(out)


def is_subgroup(group: FiniteGroup, members: Iterable[int]) -> bool:
    s = frozenset(members)
    if not s or group.identity not in s:
        return False
    t = group.table
    return all(t[a][b] in s for a in s for b in s)


def is_normal_subgroup(group: FiniteGroup, subset: ElementSubset) -> bool:
    """True iff the subset is a subgroup closed under conjugation."""
    members = frozenset(subset.indices)
    if not is_subgroup(group, members):
        return False
    return all(group.conjugate(a, g) in members for a in members for g in group.elements)


def quotient_group(
    group: FiniteGroup, normal: ElementSubset
) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Cayley table on cosets plus the element -> coset index surjection."""
    if not is_normal_subgroup(group, normal):
        raise NotNormal(f"{normal!r} is not a normal subgroup of {group.name}")
    members = normal.indices
    t = group.table
    coset_key = {}
    cosets = []
    for x in group.elements:
        key = frozenset(t[x][k] for k in members)
        if key not in coset_key:
            coset_key[key] = min(key)
            cosets.append(key)
    cosets.sort(key=min)
    index_of = {c: i for i, c in enumerate(cosets)}
    coset_map = [0] * group.order
    for c in cosets:
        for x in c:
            coset_map[x] = index_of[c]
    reps = [min(c) for c in cosets]
    table = [[coset_map[t[a][b]] for b in reps] for a in reps]
    q = make_group(table, name=f"{group.name}/N{len(members)}")
    return q, tuple(coset_map)


# -- subgroup enumeration and series ----------------------------------------


def closure(group: FiniteGroup, generators: Iterable[int]) -> frozenset[int]:
    """Subgroup generated by the given elements."""
    gens = tuple(generators)
    t = group.table
    seen = {group.identity}
    work = [group.identity]
    while work:
        a = work.pop()
        for g in gens:
            b = t[a][g]
            if b not in seen:
                seen.add(b)
                work.append(b)
    return frozenset(seen)


@lru_cache(maxsize=None)
def all_subgroups(group: FiniteGroup) -> tuple[frozenset[int], ...]:
    """Every subgroup, found by closing generator extensions to a fixpoint."""
    found = {closure(group, ())}
    frontier = list(found)
    while frontier:
        sub = frontier.pop()
        for g in group.elements:
            if g in sub:
                continue
            ext = closure(group, tuple(sorted(sub)) + (g,))
            if ext not in found:
                found.add(ext)
                frontier.append(ext)
    return tuple(sorted(found, key=lambda s: (len(s), tuple(sorted(s)))))


@lru_cache(maxsize=None)
def normal_subgroups(group: FiniteGroup) -> tuple[frozenset[int], ...]:
    """Normal subgroups, enumerated as class-union candidates.

    A normal subgroup is a union of conjugacy classes containing the
    identity, so candidates are class subsets filtered by Lagrange and
    product closure.
    """
    classes = conjugacy_classes(group)
    others = [c for c in classes if group.identity not in c]
    base = next(c for c in classes if group.identity in c)
    n = group.order
    result = []
    for bits in range(1 << len(others)):
        members = set(base)
        b = bits
        i = 0
        while b:
            if b & 1:
                members.update(others[i])
            b >>= 1
            i += 1
        if n % len(members):
            continue
        if is_subgroup(group, members):
            result.append(frozenset(members))
    result.sort(key=lambda s: (len(s), tuple(sorted(s))))
    return tuple(result)


@lru_cache(maxsize=None)
def derived_series(group: FiniteGroup) -> tuple[frozenset[int], ...]:
    """Iterated commutator subgroups, ending at the last repeated term."""
    t = group.table
    inv = group.inverses
    series = [frozenset(group.elements)]
    while True:
        current = series[-1]
        comms = {t[t[inv[x]][inv[y]]][t[x][y]] for x in current for y in current}
        nxt = closure(group, sorted(comms))
        if nxt == current:
            break
        series.append(nxt)
        if len(nxt) == 1:
            break
    return tuple(series)


def opposite_group(group: FiniteGroup) -> FiniteGroup:
    """Same carrier with reversed multiplication a*b := b.a."""
    n = group.order
    table = [[group.table[b][a] for b in range(n)] for a in range(n)]
    return make_group(table, name=f"{group.name}^op")


# -- automorphisms ----------------------------------------------------------

_AUT_ORDER_BOUND = 24


def _generating_sequence(group: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = closure(group, ())
    while len(span) < group.order:
        g = min(x for x in group.elements if x not in span)
        gens.append(g)
        span = closure(group, gens)
    return gens


def _close_hom(group: FiniteGroup, partial: list[int], x: int, y: int) -> Optional[list[int]]:
    """Extend a partial automorphism with image(x) = y and propagate products."""
    t = group.table
    new = list(partial)
    used = {v for v in new if v != -1}
    if new[x] != -1:
        return new if new[x] == y else None
    if y in used:
        return None
    new[x] = y
    used.add(y)
    known = [a for a in range(group.order) if new[a] != -1]
    queue = [x]
    while queue:
        a = queue.pop()
        for b in list(known):
            for u, v in ((a, b), (b, a)):
                p = t[u][v]
                img = t[new[u]][new[v]]
                if new[p] == -1:
                    if img in used:
                        return None
                    new[p] = img
                    used.add(img)
                    known.append(p)
                    queue.append(p)
                elif new[p] != img:
                    return None
    return new


@lru_cache(maxsize=None)
def crisp_automorphisms(group: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """All bijections with f(ab) = f(a)f(b), by generator-image backtracking."""
    if group.order > _AUT_ORDER_BOUND:
        raise GroupTooLarge(f"order {group.order} exceeds the exhaustive bound {_AUT_ORDER_BOUND}")
    gens = _generating_sequence(group)
    orders = [group.element_order(x) for x in group.elements]
    found: list[tuple[int, ...]] = []

    def search(partial: list[int], idx: int) -> None:
        if idx == len(gens):
            mapping = tuple(partial)
            if -1 not in mapping and is_group_isomorphism(group, group, mapping):
                found.append(mapping)
            return
        g = gens[idx]
        for h in group.elements:
            if orders[h] != orders[g]:
                continue
            ext = _close_hom(group, partial, g, h)
            if ext is not None:
                search(ext, idx + 1)

    start = [-1] * group.order
    start[group.identity] = group.identity
    search(start, 0)
    return tuple(sorted(found))


def is_group_isomorphism(g: FiniteGroup, h: FiniteGroup, mapping: Sequence[int]) -> bool:
    """True iff ``mapping`` is a bijective, multiplicative map from g to h."""
    m = tuple(mapping)
    if g.order != h.order or len(m) != g.order:
        return False
    if sorted(m) != list(range(h.order)):
        return False
    th, tg = h.table, g.table
    return all(th[m[a]][m[b]] == m[tg[a][b]] for a in g.elements for b in g.elements)
