"""Fuzzy automorphisms, innerness, conjugation, and the skeleton-class group."""

from itertools import permutations

import pytest

from fuzzaut.automorphisms import (
    AutomorphismError,
    NotInjective,
    NotInner,
    aut_classes,
    build_aut_class_group,
    compose_aut,
    conjugate_aut,
    identity_aut,
    inverse_aut,
    is_class_preserving,
    is_inner,
    make_automorphism,
)
from fuzzaut.groups import builtin_group, center, crisp_automorphisms, is_group_isomorphism
from fuzzaut.homs import is_fuzzy_homomorphism, lift_hom
from fuzzaut.maps import crisp_map, equiv
from fuzzaut.subsets import chain_strategy, class_strategy
from fuzzaut.induced import induced_family_raw

S3 = builtin_group("S3")
Z4 = builtin_group("Z4")
V4 = builtin_group("V4")


def sample_automorphisms(group, mu):
    lifts = [lift_hom(s, mu, group) for s in crisp_automorphisms(group)]
    family = induced_family_raw(group, mu)
    seen = {}
    for fmap in lifts + family:
        seen.setdefault(fmap.grades, fmap)
    return [make_automorphism(f) for f in seen.values()]


class TestMakeAutomorphism:
    def test_crisp_identity(self):
        aut = make_automorphism(crisp_map(S3, S3, tuple(S3.elements)))
        assert aut.images == tuple(S3.elements)

    def test_induced_maps_validate(self):
        mu = class_strategy(S3)
        for fmap in induced_family_raw(S3, mu):
            make_automorphism(fmap)

    def test_non_bijective_endomorphism_rejected(self):
        mu = chain_strategy(Z4)
        doubling = tuple((2 * x) % 4 for x in Z4.elements)
        f = lift_hom(doubling, mu, Z4)
        with pytest.raises(NotInjective):
            make_automorphism(f)

    def test_mismatched_groups_rejected(self):
        f = crisp_map(S3, builtin_group("Z2"), (0, 1, 1, 0, 0, 1))
        with pytest.raises(AutomorphismError):
            make_automorphism(f)


class TestComposition:
    def test_identity_laws(self):
        mu = class_strategy(S3)
        ident = identity_aut(S3)
        for aut in sample_automorphisms(S3, mu):
            assert compose_aut(aut, ident).images == aut.images
            assert compose_aut(ident, aut).images == aut.images

    def test_inverse_laws(self):
        mu = class_strategy(S3)
        ident = identity_aut(S3)
        for aut in sample_automorphisms(S3, mu):
            inv = inverse_aut(aut)
            assert compose_aut(aut, inv).images == ident.images
            assert compose_aut(inv, aut).images == ident.images

    def test_induced_composition_reverses_labels(self):
        mu = class_strategy(S3)
        family = induced_family_raw(S3, mu)
        a = make_automorphism(family[1])
        b = make_automorphism(family[3])
        composed = compose_aut(a, b)
        assert composed.images == family[S3.table[3][1]].images


class TestIdentity:
    def test_skeleton(self):
        assert identity_aut(S3).images == tuple(S3.elements)

    def test_equiv_with_graded_identity(self):
        for mu in (chain_strategy(S3), class_strategy(S3)):
            graded = induced_family_raw(S3, mu)[S3.identity]
            assert equiv(identity_aut(S3).fmap, graded)

    def test_is_homomorphism(self):
        assert is_fuzzy_homomorphism(identity_aut(S3).fmap).verdict


class TestClassPreserving:
    def test_identity_is_class_preserving(self):
        assert is_class_preserving(identity_aut(S3))

    def test_induced_maps_are_class_preserving(self):
        mu = class_strategy(S3)
        for fmap in induced_family_raw(S3, mu):
            assert is_class_preserving(make_automorphism(fmap))

    def test_klein4_swap_is_not(self):
        mu = class_strategy(V4)
        swap = lift_hom((0, 2, 1, 3), mu, V4)
        assert not is_class_preserving(make_automorphism(swap))


class TestInner:
    def test_identity_witness_is_least_index(self):
        assert is_inner(identity_aut(S3)) == 0
        assert is_inner(identity_aut(Z4)) == 0

    def test_induced_witness_conjugates_like_the_label(self):
        mu = class_strategy(S3)
        family = induced_family_raw(S3, mu)
        for g in S3.elements:
            aut = make_automorphism(family[g])
            w = is_inner(aut)
            assert w is not None
            assert all(aut.images[x] == S3.conjugate(x, w) for x in S3.elements)

    def test_witness_in_same_center_coset(self):
        q8 = builtin_group("Q8")
        mu = class_strategy(q8)
        family = induced_family_raw(q8, mu)
        z = set(center(q8).indices)
        for g in q8.elements:
            w = is_inner(make_automorphism(family[g]))
            assert q8.table[w][q8.inverses[g]] in z or q8.table[q8.inverses[g]][w] in z

    def test_klein4_swap_is_outer(self):
        mu = class_strategy(V4)
        swap = make_automorphism(lift_hom((0, 2, 1, 3), mu, V4))
        assert is_inner(swap) is None


class TestConjugation:
    def test_conjugating_by_identity_keeps_class(self):
        mu = class_strategy(S3)
        family = induced_family_raw(S3, mu)
        ident = identity_aut(S3)
        for g in S3.elements:
            f_g = make_automorphism(family[g])
            assert equiv(conjugate_aut(ident, f_g).fmap, f_g.fmap)

    def test_conjugate_of_inner_is_inner(self):
        mu = class_strategy(S3)
        family = induced_family_raw(S3, mu)
        samples = sample_automorphisms(S3, mu)
        for aut in samples:
            for g in (1, 3):
                result = conjugate_aut(aut, make_automorphism(family[g]))
                assert is_inner(result) is not None

    def test_trivial_inner_group_on_klein4(self):
        mu = class_strategy(V4)
        swap = make_automorphism(lift_hom((0, 2, 1, 3), mu, V4))
        ident_inner = make_automorphism(induced_family_raw(V4, mu)[V4.identity])
        result = conjugate_aut(swap, ident_inner)
        assert equiv(result.fmap, identity_aut(V4).fmap)

    def test_requires_inner_second_argument(self):
        mu = class_strategy(V4)
        swap = make_automorphism(lift_hom((0, 2, 1, 3), mu, V4))
        with pytest.raises(NotInner):
            conjugate_aut(identity_aut(V4), swap)


class TestClassGroup:
    @pytest.mark.parametrize("token", ["Z4", "V4", "S3", "D4"])
    def test_matches_crisp_automorphism_group(self, token):
        group = builtin_group(token)
        mu = class_strategy(group)
        classes, table = build_aut_class_group(sample_automorphisms(group, mu))
        crisp = crisp_automorphisms(group)
        assert {c.skeleton for c in classes} == set(crisp)
        assert table.order == len(crisp)

    def test_classes_are_sorted_and_deduplicated(self):
        mu = class_strategy(S3)
        samples = sample_automorphisms(S3, mu) * 2
        classes = aut_classes(samples)
        skeletons = [c.skeleton for c in classes]
        assert skeletons == sorted(set(skeletons))

    def test_class_to_skeleton_is_injective_homomorphism(self):
        mu = class_strategy(S3)
        classes, table = build_aut_class_group(sample_automorphisms(S3, mu))
        index = {c.skeleton: i for i, c in enumerate(classes)}
        for a in classes:
            for b in classes:
                composed = tuple(a.skeleton[b.skeleton[x]] for x in S3.elements)
                assert table.table[index[a.skeleton]][index[b.skeleton]] == index[composed]

    def test_klein4_class_group_is_symmetric_3(self):
        mu = class_strategy(V4)
        classes, table = build_aut_class_group(sample_automorphisms(V4, mu))
        s3 = builtin_group("S3")  # the automorphisms of V4 permute its three involutions
        assert table.order == 6
        assert not table.is_abelian()
        assert any(is_group_isomorphism(table, s3, p) for p in permutations(range(6)))
