import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semimod.core import builtin_instance, small_universe
from semimod.morphisms import are_isomorphic
from semimod.subquot import (
    Congruence,
    bourne_congruence,
    enumerate_congruences,
    enumerate_subsemimodules,
    generated_congruence,
    generated_subsemimodule,
    is_subtractive,
    kernel_congruence,
    quotient,
    submodule,
    subtractive_closure,
    subtractive_subsemimodules,
)

from oracles import all_congruences, all_subsemimodules, bourne_by_definition, closure_by_definition

N = "naturals"
B = builtin_instance("B")
B31 = builtin_instance("B31", N)
Z2 = builtin_instance("Z2", N)
UNIVERSE = small_universe(N, 4) + small_universe(B, 4)


def partition(c: Congruence):
    return frozenset(frozenset(b) for b in c.blocks)


class TestClosure:
    def test_0_2_is_subtractive(self):
        assert subtractive_closure(B31, {0, 2}) == (frozenset({0, 2}), True)

    def test_0_1_closes_to_everything(self):
        closure, sub = subtractive_closure(B31, {0, 1})
        assert closure == {0, 1, 2} and not sub

    def test_zero(self):
        assert subtractive_closure(B31, {0})[0] == {0}

    @pytest.mark.parametrize("M", UNIVERSE, ids=lambda M: M.name)
    def test_against_definition(self, M):
        for L in enumerate_subsemimodules(M):
            closure, flag = subtractive_closure(M, L.elements)
            assert closure == closure_by_definition(M, L.elements)
            assert flag == (closure == L.elements)


class TestSubsemimodules:
    def test_generated(self):
        assert generated_subsemimodule(B31, {1}).elements == {0, 1, 2}
        assert generated_subsemimodule(B31, set()).elements == {0}
        assert generated_subsemimodule(B31, {2}).elements == {0, 2}

    def test_counts(self):
        assert [sorted(L.elements) for L in enumerate_subsemimodules(B31)] == [[0], [0, 2], [0, 1, 2]]
        assert len(enumerate_subsemimodules(Z2)) == 2
        assert len(enumerate_subsemimodules(builtin_instance("Zero", N))) == 1

    @pytest.mark.parametrize("M", UNIVERSE, ids=lambda M: M.name)
    def test_against_powerset(self, M):
        assert {L.elements for L in enumerate_subsemimodules(M)} == all_subsemimodules(M)

    def test_subtractive_filter(self):
        C = builtin_instance("C(2,1)", N)
        assert [sorted(L.elements) for L in subtractive_subsemimodules(C)] == [[0], [0, 1, 2]]
        assert is_subtractive(B31, {0, 2})

    def test_submodule_keeps_zero_first(self):
        K, incl = submodule(B31, {2, 0})
        assert incl.table == (0, 2) and K.add == ((0, 1), (1, 1))


class TestCongruences:
    def test_generated_b31(self):
        rho = generated_congruence(B31, [(0, 2)])
        assert [list(b) for b in rho.blocks] == [[0, 2], [1]]

    def test_diagonal(self):
        assert generated_congruence(B31, []).count == 3

    def test_b_plus_b(self):
        S = builtin_instance("B⊕B", "B")
        rho = generated_congruence(S, [(2, 1)])
        assert [[S.label(x) for x in b] for b in rho.blocks] == [[(0, 0)], [(0, 1), (1, 0), (1, 1)]]

    def test_b31_lattice(self):
        got = [[list(b) for b in c.blocks] for c in enumerate_congruences(B31)]
        assert got == [[[0], [1], [2]], [[0, 2], [1]], [[0], [1, 2]], [[0, 1, 2]]]

    def test_small_counts(self):
        assert len(enumerate_congruences(Z2)) == 2
        assert len(enumerate_congruences(builtin_instance("Zero", N))) == 1

    @pytest.mark.parametrize("M", small_universe(N, 4) + small_universe(B, 4), ids=lambda M: M.name)
    def test_against_partitions(self, M):
        got = [partition(c) for c in enumerate_congruences(M)]
        assert len(got) == len(set(got))
        assert set(got) == all_congruences(M)

    def test_against_partitions_on_sums(self):
        for name, sc in (("Z2⊕B", N), ("B⊕B", "B"), ("C(1,2)⊕Z2", N)):
            M = builtin_instance(name, sc)
            assert {partition(c) for c in enumerate_congruences(M)} == all_congruences(M)

    def test_incompatible_partition(self):
        rho = Congruence.from_labels(B31, [0, 0, 1])
        assert not rho.is_compatible


class TestBourne:
    @pytest.mark.parametrize("M", UNIVERSE, ids=lambda M: M.name)
    def test_against_definition(self, M):
        for L in enumerate_subsemimodules(M):
            assert partition(bourne_congruence(M, L.elements)) == bourne_by_definition(M, L.elements)


class TestQuotient:
    def test_b31_mod_0_2(self):
        Q, pi = quotient(B31, {0, 2})
        assert pi.table == (0, 1, 0)
        assert are_isomorphic(Q, Z2)[0]

    def test_diagonal_quotient(self):
        Q, pi = quotient(B31, generated_congruence(B31, []))
        assert pi.is_injective and pi.is_surjective and Q.add == B31.add

    def test_b31_mod_1_2_is_boolean(self):
        rho = Congruence.from_labels(B31, [0, 1, 1])
        Q, _ = quotient(B31, rho)
        assert are_isomorphic(Q, builtin_instance("B", N))[0]

    def test_kernel_congruence_round_trip(self):
        for rho in enumerate_congruences(B31):
            _, pi = quotient(B31, rho)
            assert kernel_congruence(pi).classes == rho.classes


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(small_universe(N, 4)), st.data())
def test_generated_is_least(M, data):
    pairs = data.draw(st.lists(st.tuples(st.sampled_from(M.elements), st.sampled_from(M.elements)), max_size=3))
    rho = generated_congruence(M, pairs)
    assert rho.is_compatible
    assert all(rho.related(a, b) for a, b in pairs)
    for other in enumerate_congruences(M):
        if all(other.related(a, b) for a, b in pairs):
            assert rho.refines(other)
