import pytest

from semimod.core import StructuralError, builtin_instance, semimodule, small_universe
from semimod.morphisms import identity
from semimod.projectivity import (
    FLAVORS,
    HomMonoid,
    bounded_global_projectivity,
    certificate,
    induced_hom_map,
    lifts,
    relative_projectivity,
)
from semimod.subquot import quotient

from oracles import all_homs

N = "naturals"
B31 = builtin_instance("B31", N)
Z2 = builtin_instance("Z2", N)
L02 = semimodule(N, [[0, 1], [1, 1]], name="L02")
_, PI = quotient(B31, {0, 2})


class TestHomMonoid:
    def test_size_matches_oracle(self):
        for P in small_universe(N, 3):
            for M in small_universe(N, 3):
                assert len(HomMonoid.of(P, M)) == len(all_homs(P, M))

    def test_zero_is_index_zero(self):
        H = HomMonoid.of(B31, B31)
        assert H.maps[0].is_zero
        assert H.semimodule.add[0] == tuple(range(len(H)))

    def test_induced_by_projection(self):
        H_src, H_dst = HomMonoid.of(Z2, B31), HomMonoid.of(Z2, Z2)
        Pf = induced_hom_map(H_src, H_dst, PI)
        assert len(H_src) == 1 and len(H_dst) == 2
        assert Pf.image == {0} and not Pf.is_surjective

    def test_induced_from_zero(self):
        Zero = builtin_instance("Zero", N)
        Pf = induced_hom_map(HomMonoid.of(Zero, B31), HomMonoid.of(Zero, Z2), PI)
        assert Pf.is_injective and Pf.is_surjective

    def test_induced_by_identity(self):
        H = HomMonoid.of(Z2, B31)
        assert induced_hom_map(H, H, identity(B31)) == identity(H.semimodule)

    def test_mismatch(self):
        with pytest.raises(StructuralError):
            induced_hom_map(HomMonoid.of(Z2, B31), HomMonoid.of(B31, Z2), PI)


class TestLifts:
    def test_no_lift_of_identity(self):
        assert lifts(Z2, PI, identity(Z2)) == []

    def test_lifts_of_projection(self):
        hs = lifts(B31, PI, PI)
        assert identity(B31) in hs

    def test_certificate(self):
        hs = lifts(B31, PI, PI)
        killed = [h for h in HomMonoid.of(B31, B31).maps if h.image <= {0, 2}]
        for h2 in hs:
            assert certificate(hs[0], h2, killed) is not None


class TestRelative:
    @pytest.mark.parametrize("flavor", FLAVORS)
    def test_z2_not_b31_projective(self, flavor):
        rep = relative_projectivity(Z2, B31, flavor)
        assert rep.verdict is False
        assert rep.witness["pi"] == [0, 1, 0]
        if flavor != "e":
            assert rep.witness["g"] == [0, 1]

    @pytest.mark.parametrize("flavor", FLAVORS)
    def test_zero_is_projective(self, flavor):
        Zero = builtin_instance("Zero", N)
        for M in small_universe(N, 3):
            assert relative_projectivity(Zero, M, flavor).verdict

    def test_b31_self(self):
        assert relative_projectivity(B31, B31, "e").verdict

    def test_cross_check_recorded(self):
        rep = relative_projectivity(L02, B31, "e")
        assert rep.cross_check == {"normally": rep.verdict}

    def test_unknown_flavor(self):
        with pytest.raises(ValueError):
            relative_projectivity(Z2, B31, "strong")

    def test_scalar_mismatch(self):
        with pytest.raises(StructuralError):
            relative_projectivity(builtin_instance("B", "B"), B31)


class TestBoundedGlobal:
    def test_boolean_is_free(self):
        B = builtin_instance("B")
        rep = bounded_global_projectivity(builtin_instance("B", B), [], n_max=1)
        assert rep.retract_of_free["status"] == "found" and rep.retract_of_free["n"] == 1

    def test_naturals_skips_retract_search(self):
        rep = bounded_global_projectivity(L02, [B31])
        assert rep.retract_of_free["status"] == "skipped"
        assert set(rep.per_module) == {"B31"}

    def test_z2(self):
        rep = bounded_global_projectivity(Z2, [B31], flavor="k")
        assert rep.per_module == {"B31": False} and not rep.bounded_verdict


def _lifts_everything(P, M, targets, normal_only):
    """Definition-level check over every surjection ``M -> T`` into the listed targets."""
    homs = all_homs
    for T in targets:
        for pi in homs(M, T):
            if len(set(pi)) != T.size:
                continue
            if normal_only:
                ker = [x for x in M.elements if pi[x] == 0]
                if any(pi[a] == pi[b] and not ({M.add[a][k] for k in ker} & {M.add[b][k] for k in ker})
                       for a in M.elements for b in M.elements):
                    continue
            for g in homs(P, T):
                if not any(all(pi[h[p]] == g[p] for p in P.elements) for h in homs(P, M)):
                    return False
    return True


@pytest.mark.parametrize("flavor", ["plain", "k"])
def test_quotient_reduction_matches_definition(flavor):
    U = small_universe(N, 3)
    for P in U:
        for M in U:
            expected = _lifts_everything(P, M, U, normal_only=flavor == "k")
            assert relative_projectivity(P, M, flavor).verdict == expected, (P.name, M.name)
