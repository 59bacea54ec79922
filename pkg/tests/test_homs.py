"""Fuzzy homomorphisms: the sup condition, kernels, structural facts, lifts."""

from fractions import Fraction as F

import pytest

from fuzzaut.groups import builtin_group, crisp_automorphisms
from fuzzaut.homs import (
    NotHomomorphism,
    check_theorem_2_1,
    check_theorem_2_2,
    is_fuzzy_homomorphism,
    kernel,
    lift_hom,
)
from fuzzaut.maps import compose_maps, crisp_map, inverse_map, make_fuzzy_map
from fuzzaut.subsets import MuNotNormal, MuNotPointed, chain_strategy, class_strategy, flat_mu, fuzzy_subset
from fuzzaut.induced import induced_family_raw

S3 = builtin_group("S3")
Z2 = builtin_group("Z2")
Z4 = builtin_group("Z4")
SIGN = (0, 1, 1, 0, 0, 1)  # parity of each permutation of S3


def sup_condition_oracle(f):
    """Literal sup-over-factorizations check, no rank compression."""
    g, h = f.domain, f.codomain
    for x1 in g.elements:
        for x2 in g.elements:
            for y in h.elements:
                best = max(
                    min(f.grades[x1][y1], f.grades[x2][y2])
                    for y1 in h.elements
                    for y2 in h.elements
                    if h.table[y1][y2] == y
                )
                if f.grades[g.table[x1][x2]][y] != best:
                    return False
    return True


class TestHomPredicate:
    def test_crisp_indicator_of_crisp_hom(self):
        f = crisp_map(S3, Z2, SIGN)
        assert is_fuzzy_homomorphism(f).verdict

    def test_crisp_indicator_of_non_hom(self):
        f = crisp_map(S3, Z2, (0, 1, 1, 1, 0, 1))
        report = is_fuzzy_homomorphism(f)
        assert not report.verdict and report.witness is not None

    def test_induced_maps_are_homs(self):
        mu = class_strategy(S3)
        for fmap in induced_family_raw(S3, mu):
            assert is_fuzzy_homomorphism(fmap).verdict

    def test_corrupted_unit_entry_gives_witness(self):
        mu = chain_strategy(Z4)
        ident = lift_hom(tuple(Z4.elements), mu, Z4)
        rows = [list(r) for r in ident.grades]
        rows[1] = [0, 0, 1, 0]  # image of 1 forced to 2; skeleton no longer multiplies
        bad = make_fuzzy_map(Z4, Z4, rows)
        report = is_fuzzy_homomorphism(bad)
        assert not report.verdict
        assert report.witness.lhs != report.witness.rhs

    def test_agrees_with_literal_oracle(self):
        mu = chain_strategy(S3)
        for fmap in induced_family_raw(S3, mu)[:3]:
            assert is_fuzzy_homomorphism(fmap).verdict == sup_condition_oracle(fmap)
        bad = crisp_map(S3, Z2, (0, 1, 1, 1, 0, 1))
        assert is_fuzzy_homomorphism(bad).verdict == sup_condition_oracle(bad)


class TestKernel:
    def test_injective_map_has_trivial_kernel(self):
        mu = chain_strategy(Z4)
        f = lift_hom(tuple(Z4.elements), mu, Z4)
        assert kernel(f).indices == (0,)

    def test_sign_lift_kernel_is_a3(self):
        mu2 = class_strategy(Z2)
        f = lift_hom(SIGN, mu2, S3)
        assert kernel(f).indices == (0, 3, 4)

    def test_trivial_lift_kernel_is_everything(self):
        z1 = builtin_group("Z1")
        f = lift_hom((0,) * 6, class_strategy(z1), S3)
        assert kernel(f).indices == tuple(S3.elements)

    def test_kernel_requires_homomorphism(self):
        bad = crisp_map(S3, Z2, (0, 1, 1, 1, 0, 1))
        with pytest.raises(NotHomomorphism):
            kernel(bad)


class TestTheorem21:
    def test_induced_map(self):
        mu = class_strategy(S3)
        for fmap in induced_family_raw(S3, mu):
            assert check_theorem_2_1(fmap) == (True, True, True, True)

    def test_crisp_automorphism_indicator(self):
        for sigma in crisp_automorphisms(S3):
            f = crisp_map(S3, S3, sigma)
            assert check_theorem_2_1(f) == (True, True, True, True)

    def test_graded_identity(self):
        mu = chain_strategy(Z4)
        f = lift_hom(tuple(Z4.elements), mu, Z4)
        props = check_theorem_2_1(f)
        assert props == (True, True, True, True)
        assert f.grades[Z4.identity][Z4.identity] == 1


class TestTheorem22:
    def test_sign_lift(self):
        f = lift_hom(SIGN, class_strategy(Z2), S3)
        report = check_theorem_2_2(f)
        assert report.kernel_is_normal
        assert not report.one_one and not report.kernel_trivial
        assert report.verdict

    def test_induced_map(self):
        mu = class_strategy(S3)
        f = induced_family_raw(S3, mu)[1]
        report = check_theorem_2_2(f)
        assert report.kernel.indices == (0,)
        assert report.one_one and report.verdict

    def test_trivial_lift(self):
        z1 = builtin_group("Z1")
        f = lift_hom((0,) * 6, class_strategy(z1), S3)
        report = check_theorem_2_2(f)
        assert report.kernel_is_normal and report.verdict


class TestLift:
    def test_identity_lift_is_graded_identity_matrix(self):
        mu = chain_strategy(Z4)
        f = lift_hom(tuple(Z4.elements), mu, Z4)
        expected = [
            [mu.grades[Z4.table[Z4.inverses[x]][y]] for y in Z4.elements] for x in Z4.elements
        ]
        assert [list(r) for r in f.grades] == expected

    def test_sign_lift_grades(self):
        mu2 = fuzzy_subset(Z2, ["1", "1/2"])
        f = lift_hom(SIGN, mu2, S3)
        assert is_fuzzy_homomorphism(f).verdict
        assert all(f.grades[x][SIGN[x]] == 1 for x in S3.elements)
        assert all(f.grades[x][1 - SIGN[x]] == F(1, 2) for x in S3.elements)

    def test_conjugation_lift_matches_induced_matrix(self):
        mu = class_strategy(S3)
        family = induced_family_raw(S3, mu)
        for g in S3.elements:
            conj = tuple(S3.conjugate(x, g) for x in S3.elements)
            assert lift_hom(conj, mu, S3).grades == family[g].grades

    def test_rejects_non_multiplicative_phi(self):
        with pytest.raises(NotHomomorphism):
            lift_hom((0, 1, 1, 1, 0, 1), class_strategy(Z2), S3)

    def test_rejects_invalid_mu(self):
        with pytest.raises(MuNotPointed):
            lift_hom((0, 1), flat_mu(Z2), Z2)
        bad = fuzzy_subset(S3, ["1", "1/4", "1/2", "1/2", "1/2", "1/2"])
        with pytest.raises(MuNotNormal):
            lift_hom(tuple(S3.elements), bad, S3)


class TestClosureFacts:
    def test_composition_of_homs_is_hom(self):
        mu = class_strategy(S3)
        lifts = [lift_hom(s, mu, S3) for s in crisp_automorphisms(S3)]
        for f in lifts[:3]:
            for g in lifts[:3]:
                assert is_fuzzy_homomorphism(compose_maps(f, g)).verdict

    def test_inverse_of_bijective_hom_is_hom(self):
        mu = class_strategy(S3)
        for s in crisp_automorphisms(S3):
            f = lift_hom(s, mu, S3)
            assert is_fuzzy_homomorphism(inverse_map(f)).verdict

    def test_kernel_matches_skeleton_kernel(self):
        f = lift_hom(SIGN, class_strategy(Z2), S3)
        skeleton_kernel = tuple(x for x in S3.elements if f.images[x] == Z2.identity)
        assert kernel(f).indices == skeleton_kernel
