"""Fuzzy maps: validation, sup composition, equivalence, inverses."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from fuzzaut.groups import builtin_group
from fuzzaut.maps import (
    MultipleUnitEntries,
    NoUnitEntry,
    NotBijective,
    ShapeMismatch,
    compose,
    compose_maps,
    crisp_map,
    equiv,
    fuzzy_image,
    fuzzy_relation,
    identity_map,
    inverse_map,
    is_one_one,
    is_onto,
    make_fuzzy_map,
    pointwise_equal,
    skeleton,
)
from fuzzaut.subsets import chain_strategy
from fuzzaut.induced import induced_family_raw

Z4 = builtin_group("Z4")
S3 = builtin_group("S3")


def identity_grades_for(mu):
    """Rows of mu(x^-1 y): the graded identity matrix."""
    g = mu.group
    return [
        [mu.grades[g.table[g.inverses[x]][y]] for y in g.elements] for x in g.elements
    ]


def compose_oracle(f, g):
    """Definition-level sup composition, cell by cell."""
    rows = []
    for z in g.domain.elements:
        row = []
        for y in f.codomain.elements:
            candidates = [f.grades[a][y] for a in f.domain.elements if g.grades[z][a] == 1]
            row.append(max(candidates) if candidates else F(0))
        rows.append(tuple(row))
    return tuple(rows)


class TestValidation:
    def test_crisp_identity_is_valid(self):
        f = identity_map(Z4)
        assert f.images == (0, 1, 2, 3)

    def test_two_units_in_a_row(self):
        rows = [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        with pytest.raises(MultipleUnitEntries):
            make_fuzzy_map(Z4, Z4, rows)

    def test_no_unit_in_a_row(self):
        rows = [["1/2", 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        with pytest.raises(NoUnitEntry):
            make_fuzzy_map(Z4, Z4, rows)

    def test_graded_identity_matrix_is_a_map(self):
        mu = chain_strategy(Z4)
        f = make_fuzzy_map(Z4, Z4, identity_grades_for(mu))
        assert f.images == (0, 1, 2, 3)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            make_fuzzy_map(Z4, Z4, [[1, 0], [0, 1]])


class TestImages:
    def test_fuzzy_image_of_identity(self):
        f = identity_map(S3)
        assert all(fuzzy_image(f, x) == x for x in S3.elements)

    def test_induced_image_is_conjugation(self):
        mu = chain_strategy(S3)
        family = induced_family_raw(S3, mu)
        for g in S3.elements:
            f = family[g]
            assert all(fuzzy_image(f, x) == S3.conjugate(x, g) for x in S3.elements)

    def test_skeleton(self):
        assert skeleton(identity_map(Z4)) == (0, 1, 2, 3)


class TestCompose:
    def test_compose_with_identity_keeps_matrix(self):
        mu = chain_strategy(Z4)
        f = make_fuzzy_map(Z4, Z4, identity_grades_for(mu))
        assert compose(f, identity_map(Z4)).grades == f.grades
        # the other side reindexes the crisp identity's rows: equivalent, not equal
        assert compose_maps(identity_map(Z4), f).images == f.images

    def test_empty_sup_row_becomes_zero(self):
        rel = fuzzy_relation(Z4, Z4, [["1/2"] * 4, [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
        f = identity_map(Z4)
        out = compose(f, rel)
        assert out.grades[0] == (F(0),) * 4
        assert out.grades[1] == f.grades[0]

    def test_matches_definition_oracle_on_maps(self):
        mu = chain_strategy(S3)
        family = induced_family_raw(S3, mu)
        for f in family[:3]:
            for g in family[:3]:
                assert compose(f, g).grades == compose_oracle(f, g)

    @given(
        units=st.lists(st.integers(0, 3), min_size=4, max_size=4),
        extra=st.lists(st.sampled_from([F(0), F(1, 4), F(1, 2)]), min_size=16, max_size=16),
    )
    @settings(max_examples=100, deadline=None)
    def test_matches_definition_oracle_on_random_maps(self, units, extra):
        rows = [
            [F(1) if y == units[x] else extra[4 * x + y] for y in range(4)]
            for x in range(4)
        ]
        f = make_fuzzy_map(Z4, Z4, rows)
        g = make_fuzzy_map(Z4, Z4, rows[::-1])
        assert compose(f, g).grades == compose_oracle(f, g)

    def test_row_lookup_identity(self):
        # composing after a map just reindexes rows through its skeleton
        mu = chain_strategy(S3)
        family = induced_family_raw(S3, mu)
        f, g = family[1], family[3]
        out = compose(f, g)
        for z in S3.elements:
            for y in S3.elements:
                assert out.grades[z][y] == f.grades[g.images[z]][y]

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            compose(identity_map(Z4), identity_map(S3))

    def test_skeletons_compose(self):
        mu = chain_strategy(S3)
        family = induced_family_raw(S3, mu)
        for f in family:
            for g in family:
                composed = compose_maps(f, g)
                assert composed.images == tuple(f.images[g.images[z]] for z in S3.elements)


class TestPredicates:
    def test_identity_bijective(self):
        f = identity_map(Z4)
        assert is_one_one(f) and is_onto(f)

    def test_constant_map_neither(self):
        rows = [[1, 0, 0, 0]] * 4
        f = make_fuzzy_map(Z4, Z4, rows)
        assert not is_one_one(f) and not is_onto(f)

    def test_equiv_ignores_sub_unit_grades(self):
        mu = chain_strategy(Z4)
        graded = make_fuzzy_map(Z4, Z4, identity_grades_for(mu))
        assert equiv(graded, identity_map(Z4))
        assert not pointwise_equal(graded, identity_map(Z4))

    def test_equiv_detects_different_units(self):
        f = crisp_map(Z4, Z4, (0, 1, 2, 3))
        g = crisp_map(Z4, Z4, (0, 1, 3, 2))
        assert not equiv(f, g)

    def test_equiv_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            equiv(identity_map(Z4), identity_map(S3))

    def test_induced_maps_equal_across_center_cosets(self):
        q8 = builtin_group("Q8")
        mu = chain_strategy(q8)
        family = induced_family_raw(q8, mu)
        minus_one = 1  # the nontrivial central element
        for g in q8.elements:
            gz = q8.table[g][minus_one]
            assert equiv(family[g], family[gz])
            assert pointwise_equal(family[g], family[gz])


class TestInverse:
    def test_inverse_of_identity(self):
        f = identity_map(Z4)
        assert inverse_map(f).grades == f.grades

    def test_double_transpose_is_exact(self):
        mu = chain_strategy(S3)
        family = induced_family_raw(S3, mu)
        for f in family:
            assert inverse_map(inverse_map(f)).grades == f.grades

    def test_rejects_non_bijective(self):
        rows = [[1, 0, 0, 0]] * 4
        with pytest.raises(NotBijective):
            inverse_map(make_fuzzy_map(Z4, Z4, rows))

    def test_two_sided_inverse_up_to_equiv(self):
        mu = chain_strategy(S3)
        family = induced_family_raw(S3, mu)
        ident = identity_map(S3)
        for f in family:
            g = inverse_map(f)
            assert compose_maps(g, f).images == ident.images
            assert compose_maps(f, g).images == ident.images


class TestAssociativity:
    def test_associative_up_to_equiv_exhaustive(self):
        mu = chain_strategy(S3)
        family = induced_family_raw(S3, mu)
        maps = {f.grades: f for f in family}.values()
        maps = list(maps) + [identity_map(S3)]
        for f in maps:
            for g in maps:
                fg = compose_maps(f, g)
                for h in maps:
                    left = compose_maps(fg, h)
                    right = compose_maps(f, compose_maps(g, h))
                    assert left.images == right.images
