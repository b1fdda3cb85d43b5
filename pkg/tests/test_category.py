import pytest

from semimod.category import (
    Cocone,
    c_pushout,
    cocone_catalog,
    comp_elements,
    direct_complements,
    direct_sum,
    direct_summands,
    endomorphism_semiring,
    is_direct_sum,
    pullback,
    pushout,
    retract_check,
    summands_via_comp,
    verify_pushout_universal,
)
from semimod.core import StructuralError, builtin_instance, small_universe
from semimod.morphisms import are_isomorphic, compose, enumerate_hom, identity, zero_map
from semimod.subquot import quotient, submodule

from oracles import isomorphic_by_permutation

N = "naturals"
B31 = builtin_instance("B31", N)
Z2 = builtin_instance("Z2", N)
Zero = builtin_instance("Zero", N)
Bm = builtin_instance("B", "B")


class TestDirectSum:
    def test_sizes(self):
        assert direct_sum(Z2, Z2)[0].size == 4
        S, _, _ = direct_sum(B31, Zero)
        assert isomorphic_by_permutation(S, B31)

    def test_boolean_sum(self):
        S, (i1, i2), (p1, p2) = direct_sum(Bm, Bm)
        assert S.add[i1(1)][i2(1)] == 3 and S.label(3) == (1, 1)
        assert compose(p1, i1) == identity(Bm) and compose(p2, i1).is_zero

    def test_internal(self):
        assert is_direct_sum(B31, {0, 1, 2}, {0})[0] is True
        S, (i1, i2), _ = direct_sum(Bm, Bm)
        assert is_direct_sum(S, i1.image, i2.image)[0] is True

    def test_boolean_with_itself_is_not_direct(self):
        # 1 = 1+0 = 0+1
        assert is_direct_sum(Bm, {0, 1}, {0, 1}) == (False, ("non-unique", 1, (0, 1), (1, 0)))

    def test_complements(self):
        S, (i1, i2), _ = direct_sum(Bm, Bm)
        assert i2.image in direct_complements(S, i1.image)


class TestPullback:
    def test_identity_on_b(self):
        Q, pa, pb = pullback(identity(Bm), identity(Bm))
        assert [(pa(x), pb(x)) for x in Q.elements] == [(0, 0), (1, 1)]
        assert are_isomorphic(Q, Bm)[0]

    def test_projection_against_identity(self):
        _, pi = quotient(B31, {0, 2})
        Q, pa, pb = pullback(pi, identity(pi.cod))
        assert {(pa(x), pb(x)) for x in Q.elements} == {(0, 0), (2, 0), (1, 1)}
        assert are_isomorphic(Q, B31)[0]

    def test_zero_map(self):
        Q, _, _ = pullback(zero_map(B31, Z2), identity(Z2))
        assert are_isomorphic(Q, B31)[0]

    def test_needs_shared_codomain(self):
        with pytest.raises(StructuralError):
            pullback(identity(Z2), identity(B31))


class TestPushout:
    def test_along_identity(self):
        res = pushout(identity(B31), identity(B31))
        assert are_isomorphic(res.apex, B31)[0]

    def test_inclusion_and_zero(self):
        L, iota = submodule(B31, {0, 2})
        res = pushout(iota, zero_map(L, Zero))
        assert are_isomorphic(res.apex, Z2)[0]
        _, pi = quotient(B31, {0, 2})
        cocone = Cocone(pi, zero_map(Zero, pi.cod))
        check = verify_pushout_universal(iota, zero_map(L, Zero), res.cocone, [cocone])
        assert check.passed and len(check.mediating) == 1
        phi = check.mediating[0]
        assert phi.is_injective and phi.is_surjective

    def test_surjective_leg_transfers(self):
        _, pi = quotient(B31, {0, 2})
        for g in enumerate_hom(B31, Z2):
            res = pushout(pi, g)
            assert res.f_prime.is_surjective

    def test_self_is_universal(self):
        L, iota = submodule(B31, {0, 2})
        res = pushout(iota, iota)
        check = verify_pushout_universal(iota, iota, res.cocone, [res.cocone])
        assert check.passed and check.mediating[0] == identity(res.apex)

    def test_direct_sum_is_not_the_pushout(self):
        L, iota = submodule(B31, {0, 2})
        S, (i1, i2), _ = direct_sum(B31, B31)
        candidate = Cocone(i1, i2)
        assert not candidate.commutes_over(iota, iota)
        check = verify_pushout_universal(iota, iota, candidate, cocone_catalog(iota, iota))
        assert not check.passed

    def test_catalog_sweep_small(self):
        U = [M for M in small_universe(N, 3)]
        for Lm in U[:3]:
            for M in U:
                for Nn in U:
                    for f in enumerate_hom(Lm, M):
                        for g in enumerate_hom(Lm, Nn):
                            res = pushout(f, g)
                            check = verify_pushout_universal(f, g, res.cocone, cocone_catalog(f, g, [Z2]))
                            assert check.passed, (f, g, check.failure)


class TestCPushout:
    def test_from_zero_is_direct_sum(self):
        res = c_pushout(zero_map(Zero, B31), zero_map(Zero, Z2))
        assert res.apex.size == B31.size * Z2.size

    def test_contains_pushout_congruence(self):
        L, iota = submodule(B31, {0, 2})
        po, cp = pushout(iota, identity(L)), c_pushout(iota, identity(L))
        assert po.rho.refines(cp.rho)

    def test_cancellative_inputs_agree(self):
        for f in enumerate_hom(Z2, Z2):
            for g in enumerate_hom(Z2, Z2):
                assert pushout(f, g).rho.classes == c_pushout(f, g).rho.classes


class TestRetracts:
    def test_0_2_is_retract_of_b31(self):
        L, _ = submodule(B31, {0, 2})
        ok, (theta, psi) = retract_check(L, B31)
        assert ok and compose(theta, psi) == identity(L)

    def test_z2_is_not(self):
        assert retract_check(Z2, B31)[0] is False

    def test_self(self):
        assert retract_check(B31, B31)[0]


class TestComp:
    def test_boolean(self):
        assert comp_elements(builtin_instance("B")) == {0, 1}

    def test_b31(self):
        assert comp_elements(builtin_instance("B31")) == {0, 1}

    def test_field(self):
        assert comp_elements(builtin_instance("F2")) == {0, 1}

    def test_summands_agree(self):
        for name, sc in (("B⊕B", "B"), ("Z2⊕Z2", N), ("B31", N)):
            M = builtin_instance(name, sc)
            assert summands_via_comp(M) == direct_summands(M)

    def test_endomorphisms(self):
        T, maps = endomorphism_semiring(Bm)
        assert T.size == 2 and maps[T.one] == identity(Bm)
