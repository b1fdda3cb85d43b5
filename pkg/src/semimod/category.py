"""Direct sums, pullbacks, pushouts, C-pushouts, retracts and complemented elements."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import FiniteSemiring, FiniteSemimodule, StructuralError, Subsemimodule, direct_sum_module
from .morphisms import DEFAULT_BUDGET, LinearMap, compose, enumerate_hom, identity
from .subquot import (
    Congruence,
    enumerate_congruences,
    enumerate_subsemimodules,
    generated_congruence,
    quotient,
    submodule,
)


def direct_sum(M: FiniteSemimodule, N: FiniteSemimodule, name: str | None = None):
    """``M ⊕ N`` with injections ``(i_M, i_N)`` and projections ``(p_M, p_N)``."""
    S = direct_sum_module(M, N, name)
    q = N.size
    i_m = LinearMap(M, S, tuple(m * q for m in M.elements))
    i_n = LinearMap(N, S, tuple(N.elements))
    p_m = LinearMap(S, M, tuple(x // q for x in S.elements))
    p_n = LinearMap(S, N, tuple(x % q for x in S.elements))
    return S, (i_m, i_n), (p_m, p_n)


def is_direct_sum(M: FiniteSemimodule, K: Iterable[int], L: Iterable[int]):
    """Whether every element of ``M`` is uniquely ``k + l``.

    Returns ``(True, None)``, ``(False, ("uncovered", m))`` or
    ``(False, ("non-unique", m, (k, l), (k2, l2)))``.
    """
    K = sorted(K.elements if isinstance(K, Subsemimodule) else set(K))
    L = sorted(L.elements if isinstance(L, Subsemimodule) else set(L))
    first: dict[int, tuple[int, int]] = {}
    clash = None
    for k in K:
        for l in L:
            m = M.add[k][l]
            if m in first:
                if clash is None:
                    clash = ("non-unique", m, first[m], (k, l))
            else:
                first[m] = (k, l)
    for m in M.elements:
        if m not in first:
            return False, ("uncovered", m)
    if clash is not None:
        return False, clash
    return True, None


def direct_complements(M: FiniteSemimodule, K: Iterable[int]) -> list[frozenset[int]]:
    """Subsemimodules ``L`` with ``M = K ⊕ L``."""
    return [L.elements for L in enumerate_subsemimodules(M) if is_direct_sum(M, K, L.elements)[0]]


def pullback(f: LinearMap, g: LinearMap, name: str | None = None):
    """``Q = {(a, b) : f(a) = g(b)}`` with its legs to ``A = dom f`` and ``B = dom g``."""
    if f.cod != g.cod:
        raise StructuralError("pullback needs a shared codomain")
    A, B = f.dom, g.dom
    S, _, (p_a, p_b) = direct_sum(A, B)
    q = B.size
    members = [a * q + b for a in A.elements for b in B.elements if f(a) == g(b)]
    Q, incl = submodule(S, members, name or f"{A.name}×{B.name}")
    return Q, compose(p_a, incl), compose(p_b, incl)


@dataclass(frozen=True)
class Cocone:
    """Legs ``g_star: M -> X`` and ``f_star: N -> X`` under a span ``(f, g)``."""

    g_star: LinearMap
    f_star: LinearMap

    @property
    def apex(self) -> FiniteSemimodule:
        return self.g_star.cod

    def commutes_over(self, f: LinearMap, g: LinearMap) -> bool:
        return compose(self.g_star, f).table == compose(self.f_star, g).table


@dataclass(frozen=True)
class PushoutResult:
    apex: FiniteSemimodule
    g_prime: LinearMap
    f_prime: LinearMap
    rho: Congruence

    @property
    def cocone(self) -> Cocone:
        return Cocone(self.g_prime, self.f_prime)


def _check_span(f: LinearMap, g: LinearMap) -> None:
    if f.dom != g.dom:
        raise StructuralError("span maps need a shared domain")


def pushout(f: LinearMap, g: LinearMap) -> PushoutResult:
    """``(M ⊕ N)/rho`` where ``rho`` is generated by ``(f(l), 0) ~ (0, g(l))``."""
    _check_span(f, g)
    S, (i_m, i_n), _ = direct_sum(f.cod, g.cod)
    rho = generated_congruence(S, [(i_m(f(l)), i_n(g(l))) for l in f.dom.elements])
    Q, pi = quotient(S, rho, name=f"PO({f.cod.name},{g.cod.name})")
    return PushoutResult(Q, compose(pi, i_m), compose(pi, i_n), rho)


def c_pushout_relation(f: LinearMap, g: LinearMap) -> tuple[FiniteSemimodule, set[tuple[int, int]]]:
    """The explicit relation on ``M ⊕ N``: ``(m1,n1) ~ (m2,n2)`` iff some ``l1, l2``
    give ``m1 + f(l1) = m2 + f(l2)`` and ``n1 + g(l2) = n2 + g(l1)``."""
    _check_span(f, g)
    M, N = f.cod, g.cod
    S = direct_sum_module(M, N)
    q = N.size
    ls = list(f.dom.elements)
    fl = [f(l) for l in ls]
    gl = [g(l) for l in ls]
    # key[x][(a, b)] = (m + f(a), n + g(b)); x ~ y iff key[x][(a, b)] == key[y][(b, a)]
    keys = []
    for x in S.elements:
        m, n = divmod(x, q)
        keys.append({(a, b): (M.add[m][fl[a]], N.add[n][gl[b]]) for a in ls for b in ls})
    rel = set()
    for x in S.elements:
        kx = keys[x]
        for y in S.elements:
            ky = keys[y]
            if any(kx[(a, b)] == ky[(b, a)] for a in ls for b in ls):
                rel.add((x, y))
    return S, rel


def c_pushout(f: LinearMap, g: LinearMap) -> PushoutResult:
    """Quotient of ``M ⊕ N`` by the C-pushout relation.

    The relation is checked to be an equivalence compatible with the
    structure; a failure raises ``AssertionError``.
    """
    S, rel = c_pushout_relation(f, g)
    classes = [min(y for y in S.elements if (x, y) in rel) for x in S.elements]
    for x in S.elements:
        assert (x, x) in rel, f"C-pushout relation not reflexive at {x}"
        for y in S.elements:
            if (x, y) in rel:
                assert (y, x) in rel, f"C-pushout relation not symmetric at {(x, y)}"
                assert classes[x] == classes[y], f"C-pushout relation not transitive at {(x, y)}"
    rho = Congruence.from_labels(S, classes)
    assert sum(len(b) ** 2 for b in rho.blocks) == len(rel), "C-pushout relation not transitive"
    w = rho.compatibility_witness()
    assert w is None, f"C-pushout relation is not a congruence: {w}"
    Q, pi = quotient(S, rho, name=f"CP({f.cod.name},{g.cod.name})")
    q = g.cod.size
    i_m = LinearMap(f.cod, S, tuple(m * q for m in f.cod.elements))
    i_n = LinearMap(g.cod, S, tuple(range(q)))
    return PushoutResult(Q, compose(pi, i_m), compose(pi, i_n), rho)


def commuting_cocones(f: LinearMap, g: LinearMap, X: FiniteSemimodule,
                      budget: int = DEFAULT_BUDGET) -> list[Cocone]:
    """Every cocone over ``(f, g)`` with apex ``X``."""
    by_comp: dict[tuple, list[LinearMap]] = {}
    for fs in enumerate_hom(g.cod, X, budget):
        by_comp.setdefault(compose(fs, g).table, []).append(fs)
    out = []
    for gs in enumerate_hom(f.cod, X, budget):
        for fs in by_comp.get(compose(gs, f).table, ()):
            out.append(Cocone(gs, fs))
    return out


def cocone_catalog(f: LinearMap, g: LinearMap, targets: Sequence[FiniteSemimodule] = (),
                   budget: int = DEFAULT_BUDGET) -> list[Cocone]:
    """Quotient cocones ``M ⊕ N -> (M ⊕ N)/rho`` that commute, plus all cocones into ``targets``."""
    _check_span(f, g)
    S, (i_m, i_n), _ = direct_sum(f.cod, g.cod)
    out = []
    for rho in enumerate_congruences(S):
        Q, pi = quotient(S, rho)
        c = Cocone(compose(pi, i_m), compose(pi, i_n))
        if c.commutes_over(f, g):
            out.append(c)
    for X in targets:
        if X.scalars == S.scalars:
            out.extend(commuting_cocones(f, g, X, budget))
    return out


@dataclass
class UniversalCheck:
    passed: bool
    commutes: bool
    cocones: int = 0
    mediating: list = field(default_factory=list)
    failure: tuple | None = None


def mediating_maps(candidate: Cocone, cocone: Cocone, budget: int = DEFAULT_BUDGET) -> list[LinearMap]:
    """All ``phi`` with ``phi o g' = g*`` and ``phi o f' = f*``."""
    allowed: dict[int, set[int]] = {}
    for leg, target in ((candidate.g_star, cocone.g_star), (candidate.f_star, cocone.f_star)):
        for x, p in enumerate(leg.table):
            want = target(x)
            if allowed.setdefault(p, {want}) != {want}:
                return []
    return enumerate_hom(candidate.apex, cocone.apex, budget, allowed=allowed)


def verify_pushout_universal(f: LinearMap, g: LinearMap, candidate: Cocone, cocones: Iterable[Cocone],
                             budget: int = DEFAULT_BUDGET) -> UniversalCheck:
    """Check that ``candidate`` commutes and that each cocone factors through it uniquely.

    The check is only as strong as the supplied cocone list.
    """
    if not candidate.commutes_over(f, g):
        return UniversalCheck(False, False, failure=("candidate does not commute",))
    out = UniversalCheck(True, True)
    for i, c in enumerate(cocones):
        if not c.commutes_over(f, g):
            raise StructuralError(f"cocone {i} does not commute over the span")
        phis = mediating_maps(candidate, c, budget)
        out.cocones += 1
        if len(phis) != 1:
            out.passed = False
            out.failure = ("no mediating map" if not phis else "mediating map not unique", i, c, len(phis))
            return out
        out.mediating.append(phis[0])
    return out


def retract_check(N: FiniteSemimodule, M: FiniteSemimodule, budget: int = DEFAULT_BUDGET):
    """Search ``theta: M -> N`` and ``psi: N -> M`` with ``theta o psi = id_N``.

    Returns ``(True, (theta, psi))`` for the first pair in lexicographic order
    of ``psi`` then ``theta``, or ``(False, None)``.
    """
    if N.scalars != M.scalars:
        raise StructuralError("retract check across different scalar domains")
    for psi in enumerate_hom(N, M, budget, injective=True):
        allowed = {psi(n): {n} for n in N.elements}
        thetas = enumerate_hom(M, N, budget, allowed=allowed)
        if thetas:
            return True, (thetas[0], psi)
    return False, None


def endomorphism_semiring(M: FiniteSemimodule, budget: int = DEFAULT_BUDGET):
    """``End(M)`` under pointwise sum and composition, with the maps in index order."""
    if M.size < 2:
        raise StructuralError("End of the zero semimodule is not a semiring (0 = 1)")
    maps = enumerate_hom(M, M, budget)
    index = {h.table: i for i, h in enumerate(maps)}
    add = tuple(tuple(index[(a + b).table] for b in maps) for a in maps)
    mul = tuple(tuple(index[compose(a, b).table] for b in maps) for a in maps)
    one = index[identity(M).table]
    T = FiniteSemiring(f"End({M.name})", add, mul, one)
    return T, maps


def comp_elements(T: FiniteSemiring) -> frozenset[int]:
    """Elements ``t`` with some ``u``: ``t + u = 1`` and ``tu = 0 = ut``."""
    return frozenset(
        t for t in T.elements
        if any(T.add[t][u] == T.one and T.mul[t][u] == 0 and T.mul[u][t] == 0 for u in T.elements)
    )


def summands_via_comp(M: FiniteSemimodule, budget: int = DEFAULT_BUDGET) -> set[frozenset[int]]:
    """Images ``t(M)`` for complemented ``t`` in ``End(M)``; these are the direct summands."""
    T, maps = endomorphism_semiring(M, budget)
    return {maps[t].image for t in comp_elements(T)}


def direct_summands(M: FiniteSemimodule) -> set[frozenset[int]]:
    """Subsemimodules that have a direct complement."""
    subs = [L.elements for L in enumerate_subsemimodules(M)]
    return {K for K, L in itertools.product(subs, subs) if is_direct_sum(M, K, L)[0]}
