"""Randomised and exhaustive law suites over small semimodules.

Each suite checks a family of statements over instances drawn from the
catalog of small semimodules (commutative monoids, and idempotent monoids
over the Boolean semiring).  A run stops at the first counterexample and
reports it with everything needed to reproduce it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .category import (
    c_pushout,
    cocone_catalog,
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
from .core import NATURALS, FiniteSemiring, FiniteSemimodule, builtin_instance, is_ideal_simple, small_universe
from .exactness import (
    SequenceSpec,
    classify_exactness,
    classify_position,
    is_short_exact,
    ker_coker_sequence,
    kernel_iso_canonical,
    quotient_iso_canonical,
    right_inverses,
)
from .model import map_obj, module_obj
from .morphisms import (
    LinearMap,
    are_isomorphic,
    classify_normality,
    compose,
    enumerate_hom,
    identity,
    zero_map,
)
from .projectivity import HomMonoid, free_module, induced_hom_map, relative_projectivity
from .subquot import (
    Congruence,
    enumerate_congruences,
    enumerate_subsemimodules,
    generated_congruence,
    quotient,
    submodule,
    subtractive_closure,
    subtractive_subsemimodules,
)


class Counterexample(Exception):
    def __init__(self, statement: str, **bundle):
        super().__init__(statement)
        self.statement = statement
        self.bundle = bundle


@dataclass
class SuiteResult:
    name: str
    seed: int
    samples: int
    passed: bool = True
    instances: int = 0
    checks: dict[str, int] = field(default_factory=dict)
    counterexample: dict | None = None

    def count(self, statement: str, n: int = 1) -> None:
        self.checks[statement] = self.checks.get(statement, 0) + n

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "seed": self.seed,
            "samples": self.samples,
            "passed": self.passed,
            "instances": self.instances,
            "checks": dict(sorted(self.checks.items())),
            "counterexample": self.counterexample,
        }


def _encode(v):
    if isinstance(v, FiniteSemimodule):
        return module_obj(v)
    if isinstance(v, FiniteSemiring):
        return {"name": v.name, "add": [list(r) for r in v.add], "mul": [list(r) for r in v.mul], "one": v.one}
    if isinstance(v, Congruence):
        return [list(b) for b in v.blocks]
    if isinstance(v, LinearMap):
        return {**map_obj(v), "dom_tables": module_obj(v.dom), "cod_tables": module_obj(v.cod)}
    if isinstance(v, (frozenset, set)):
        return sorted(v)
    if isinstance(v, (tuple, list)):
        return [_encode(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _encode(x) for k, x in v.items()}
    if v is None or isinstance(v, (bool, int, str)):
        return v
    return repr(v)


def _check(res: SuiteResult, statement: str, holds: bool, **bundle) -> None:
    res.count(statement)
    if not holds:
        raise Counterexample(statement, **bundle)


# ---------------------------------------------------------------------------
# instance sources


BOOL = builtin_instance("B")


@lru_cache(maxsize=None)
def catalog(max_size: int = 4) -> tuple[FiniteSemimodule, ...]:
    """Commutative monoids and Boolean semimodules of size ``<= max_size`` up to isomorphism."""
    nat, boo = universes(max_size)
    return nat + boo


@lru_cache(maxsize=None)
def universes(max_size: int = 4) -> tuple[tuple[FiniteSemimodule, ...], ...]:
    """The naturals universe and the Boolean universe, separately."""
    return (small_universe(NATURALS, max_size),
            tuple(M.renamed(f"B:{M.name}") for M in small_universe(BOOL, max_size)))


@lru_cache(maxsize=None)
def homs(P: FiniteSemimodule, M: FiniteSemimodule) -> tuple[LinearMap, ...]:
    return tuple(enumerate_hom(P, M))


@lru_cache(maxsize=None)
def _sub_cache(M: FiniteSemimodule):
    return tuple(subtractive_subsemimodules(M))


def _pick_map(rng: random.Random, pool, cond: Callable[[LinearMap], bool] | None = None, tries: int = 200):
    """Draw ``(L, M, f)`` from ``pool`` with ``f`` satisfying ``cond``."""
    for _ in range(tries):
        universe = rng.choice(pool)
        L, M = rng.choice(universe), rng.choice(universe)
        cands = [f for f in homs(L, M) if cond is None or cond(f)]
        if cands:
            return rng.choice(cands)
    raise RuntimeError("could not satisfy sampling condition")


def _pick_after(rng: random.Random, universe, f: LinearMap, cond=None, tries: int = 200):
    """Draw ``g`` with ``dom g = cod f`` satisfying ``cond``."""
    for _ in range(tries):
        N = rng.choice(universe)
        cands = [g for g in homs(f.cod, N) if cond is None or cond(g)]
        if cands:
            return rng.choice(cands)
    return None


def _universe_of(M: FiniteSemimodule, max_size: int = 4):
    return universes(max_size)[0 if M.naturals else 1]


def _pick_pair(rng, pool, f_cond=None, g_cond=None):
    for _ in range(500):
        f = _pick_map(rng, pool, f_cond)
        g = _pick_after(rng, _universe_of(f.cod), f, g_cond, tries=20)
        if g is not None:
            return f, g
    raise RuntimeError("could not satisfy sampling condition")


def _pick_span(rng, pool, f_cond=None, g_cond=None, max_sum: int = 16):
    for _ in range(500):
        f = _pick_map(rng, pool, f_cond)
        U = _universe_of(f.dom)
        N = rng.choice(U)
        if f.cod.size * N.size > max_sum:
            continue
        cands = [g for g in homs(f.dom, N) if g_cond is None or g_cond(g)]
        if cands:
            return f, rng.choice(cands)
    raise RuntimeError("could not satisfy sampling condition")


def _inj(f):
    return f.is_injective


def _surj(f):
    return f.is_surjective


def _normal_epi(f):
    return f.is_surjective and classify_normality(f).k_normal


def _normal_mono(f):
    return f.is_injective and classify_normality(f).i_normal


# ---------------------------------------------------------------------------
# morphism suites


def suite_i_normal(res: SuiteResult, rng: random.Random) -> None:
    """Composition behaviour of k- and i-normality, in four sampling streams."""
    pool = universes(4)
    streams = [("g injective", None, _inj), ("g normal mono", None, _normal_mono),
               ("f surjective", _surj, None), ("f normal epi", _normal_epi, None)]
    for label, fc, gc in streams:
        for _ in range(res.samples):
            f, g = _pick_pair(rng, pool, fc, gc)
            res.instances += 1
            nf, ng, ngf = classify_normality(f), classify_normality(g), classify_normality(compose(g, f))
            b = dict(stream=label, f=f, g=g)
            _check(res, "surjective => i-normal", (not nf.surjective) or nf.i_normal, **b)
            _check(res, "injective => k-normal", (not ng.injective) or ng.k_normal, **b)
            if ng.injective:
                _check(res, "1a", nf.k_normal == ngf.k_normal, **b)
                _check(res, "1b i-normal", (not ngf.i_normal) or nf.i_normal, **b)
                _check(res, "1b normal", (not ngf.normal) or nf.normal, **b)
                if ng.i_normal:
                    _check(res, "1c i-normal", nf.i_normal == ngf.i_normal, **b)
                    _check(res, "1c normal", nf.normal == ngf.normal, **b)
            if nf.surjective:
                _check(res, "2a", ng.i_normal == ngf.i_normal, **b)
                _check(res, "2b k-normal", (not ngf.k_normal) or ng.k_normal, **b)
                _check(res, "2b normal", (not ngf.normal) or ng.normal, **b)
                if nf.k_normal:
                    _check(res, "2c k-normal", ng.k_normal == ngf.k_normal, **b)
                    _check(res, "2c normal", ng.normal == ngf.normal, **b)


def suite_hom(res: SuiteResult, rng: random.Random) -> None:
    """Hom-sets contain zero and are closed under addition; composition is associative."""
    pool = universes(4)
    for _ in range(res.samples):
        f, g = _pick_pair(rng, pool)
        h = _pick_after(rng, _universe_of(g.cod), g) or identity(g.cod)
        res.instances += 1
        H = homs(f.dom, f.cod)
        tables = {x.table for x in H}
        b = dict(f=f, g=g, h=h)
        _check(res, "zero in Hom", zero_map(f.dom, f.cod).table in tables, **b)
        _check(res, "Hom closed under +", all((x + y).table in tables for x in H for y in H), **b)
        _check(res, "associative", compose(h, compose(g, f)) == compose(compose(h, g), f), **b)
        _check(res, "identity", compose(f, identity(f.dom)) == f == compose(identity(f.cod), f), **b)


# ---------------------------------------------------------------------------
# subquotient suites


def suite_congruence(res: SuiteResult, rng: random.Random) -> None:
    """Closure properties of generated congruences and subtractive closure."""
    pool = [M for U in universes(4) for M in U]
    for _ in range(res.samples):
        M = rng.choice(pool)
        res.instances += 1
        pairs = [(rng.randrange(M.size), rng.randrange(M.size)) for _ in range(rng.randrange(3))]
        more = pairs + [(rng.randrange(M.size), rng.randrange(M.size))]
        rho = generated_congruence(M, pairs)
        b = dict(M=M, pairs=pairs, extra=more[-1])
        _check(res, "generated is a congruence", rho.is_compatible, **b)
        _check(res, "contains generators", all(rho.related(a, c) for a, c in pairs), **b)
        _check(res, "idempotent", generated_congruence(M, rho.pairs()) == rho, **b)
        _check(res, "monotone", rho.refines(generated_congruence(M, more)), **b)
        for sub in enumerate_subsemimodules(M):
            L = sub.elements
            closure, _ = subtractive_closure(M, L)
            b2 = dict(M=M, L=L)
            _check(res, "closure extensive", L <= closure, **b2)
            _check(res, "closure idempotent", subtractive_closure(M, closure)[0] == closure, **b2)
            _, pi = quotient(M, sub)
            _check(res, "Ker(pi_L) = closure", pi.kernel == closure, **b2)
            _check(res, "pi_L normal epi", _normal_epi(pi), **b2)
    for M in catalog(3):
        for rho in enumerate_congruences(M):
            _check(res, "transversal regenerates", generated_congruence(M, rho.pairs()) == rho, M=M)


def suite_s_char(res: SuiteResult, rng: random.Random) -> None:
    """Ideal-simple iff every nonzero map into M is surjective (sources range over the catalog)."""
    for U in universes(4):
        for M in U:
            if M.size < 2:
                continue
            res.instances += 1
            simple, _ = is_ideal_simple(M)
            all_surj = all(h.is_surjective for P in U for h in homs(P, M) if not h.is_zero)
            _check(res, "ideal-simple <=> nonzero maps in are onto", simple == all_surj, M=M)


# ---------------------------------------------------------------------------
# category suites


def suite_transfers(res: SuiteResult, rng: random.Random) -> None:
    """Pushout legs inherit surjectivity, i-normality, normal-epi and injectivity."""
    pool = universes(4)
    parts = [
        ("(1) f surjective", _surj, None),
        ("(2) f i-normal", lambda f: classify_normality(f).i_normal, None),
        ("(3) f normal epi", _normal_epi, None),
        ("(4) f injective, g normal epi", _inj, _normal_epi),
    ]
    for label, fc, gc in parts:
        for _ in range(res.samples):
            f, g = _pick_span(rng, pool, fc, gc)
            res.instances += 1
            po = pushout(f, g)
            fp = classify_normality(po.f_prime)
            b = dict(part=label, f=f, g=g, rho=[list(x) for x in po.rho.blocks])
            _check(res, "pushout commutes", po.cocone.commutes_over(f, g), **b)
            if label.startswith("(1)"):
                _check(res, label, fp.surjective, **b)
            elif label.startswith("(2)"):
                _check(res, label, fp.i_normal, **b)
            elif label.startswith("(3)"):
                _check(res, label, fp.normal_epi, **b)
            else:
                _check(res, label, fp.injective, **b)
            cp = c_pushout(f, g)
            _check(res, "C-pushout relation is a congruence", cp.rho.is_compatible, **b)
            _check(res, "pushout congruence inside C-pushout congruence", po.rho.refines(cp.rho), **b)


def pushout_sweep_spans() -> list[tuple[LinearMap, LinearMap]]:
    """Every span ``L -> M, L -> N`` over the catalog with either
    ``|M| = |N| = 2`` or ``|L| <= 2`` and ``|M|, |N| <= 3`` (``M, N`` nonzero)."""
    out = []
    for U in universes(4):
        for L in U:
            for M in U:
                for N in U:
                    if M.size < 2 or N.size < 2:
                        continue
                    if not ((M.size == N.size == 2) or (L.size <= 2 and M.size <= 3 and N.size <= 3)):
                        continue
                    for f in homs(L, M):
                        for g in homs(L, N):
                            out.append((f, g))
    return out


def suite_pushout(res: SuiteResult, rng: random.Random) -> None:
    """Universal property of the constructed pushout against the cocone catalog (exhaustive)."""
    spans = pushout_sweep_spans()
    for f, g in spans:
        res.instances += 1
        po = pushout(f, g)
        targets = _universe_of(f.dom)
        cocones = cocone_catalog(f, g, targets)
        check = verify_pushout_universal(f, g, po.cocone, cocones)
        res.count("cocones", len(cocones))
        _check(res, "unique mediating map for every cocone", check.passed,
               f=f, g=g, failure=repr(check.failure))


def suite_d_iso(res: SuiteResult, rng: random.Random) -> None:
    """Direct sums: trivial intersection, M/K ≅ L, and the Comp(End M) description of summands."""
    for U in universes(4):
        for M in U:
            subs = enumerate_subsemimodules(M)
            for K in subs:
                for L in subs:
                    ok, _ = is_direct_sum(M, K.elements, L.elements)
                    if not ok:
                        continue
                    res.instances += 1
                    b = dict(M=M, K=K.elements, L=L.elements)
                    _check(res, "direct => K∩L = 0", K.elements & L.elements == {0}, **b)
                    Q, _ = quotient(M, K)
                    Ls, _ = submodule(M, L.elements)
                    _check(res, "M = K⊕L => M/K ≅ L", are_isomorphic(Q, Ls)[0], **b)
            if M.size >= 2:
                _check(res, "summands = images of Comp(End M)", summands_via_comp(M) == direct_summands(M), M=M)
                T, maps = endomorphism_semiring(M)
                idem_images = {maps[t].image for t in T.elements if T.mul[t][t] == t}
                for N in U:
                    if N.size > M.size:
                        continue
                    ret = retract_check(N, M)[0]
                    via = any(are_isomorphic(N, submodule(M, im)[0])[0] for im in idem_images)
                    _check(res, "retract <=> image of an idempotent", ret == via, M=M, N=N)


# ---------------------------------------------------------------------------
# exactness suites


def _exactness_equivalences(res: SuiteResult, f: LinearMap, g: LinearMap, /, **b) -> None:
    nf, ng = classify_normality(f), classify_normality(g)
    zl = zero_map(submodule(f.dom, [0])[0], f.dom)
    zr = zero_map(g.cod, submodule(g.cod, [0])[0])
    at_L = classify_position(zl, f)
    at_M = classify_position(f, g)
    at_N = classify_position(g, zr)
    k_iso = kernel_iso_canonical(f, g)
    q_iso = quotient_iso_canonical(f, g)
    _check(res, "exact (1)", at_L.exact == nf.injective, **b)
    _check(res, "exact (2)", at_N.exact == ng.surjective, **b)
    _check(res, "exact (3)", (at_L.semi_exact and at_M.semi_exact and nf.normal) == k_iso, **b)
    _check(res, "exact (4)", (at_L.exact and at_M.exact) == (k_iso and ng.k_normal), **b)
    _check(res, "exact (5)", (at_M.semi_exact and at_N.semi_exact and ng.normal) == q_iso, **b)
    _check(res, "exact (6)", (at_M.exact and at_N.exact) == (q_iso and nf.i_normal), **b)
    ses = at_L.exact and at_M.exact and at_N.exact
    _check(res, "exact (7)", ses == (k_iso and q_iso), **b)
    cond3 = nf.injective and f.image == g.kernel and ng.surjective and ng.k_normal
    _check(res, "M/L (1)<=>(3)", ses == cond3, **b)
    _check(res, "is_short_exact agrees", is_short_exact(f, g).short_exact == ses, **b)
    if ses:
        _check(res, "M/L: f and g normal", nf.normal and ng.normal, **b)


def suite_exact(res: SuiteResult, rng: random.Random, max_size: int = 5) -> None:
    """Equivalences for exactness on inclusion/projection pairs (exhaustive) and random pairs."""
    for U in universes(max_size):
        for M in U:
            subs = enumerate_subsemimodules(M)
            incl = [submodule(M, L.elements)[1] for L in subs]
            proj = [quotient(M, L)[1] for L in subs]
            for f in incl:
                for g in proj:
                    res.instances += 1
                    _exactness_equivalences(res, f, g, f=f, g=g)
    pool = universes(4)
    for _ in range(res.samples):
        f, g = _pick_pair(rng, pool)
        res.instances += 1
        _exactness_equivalences(res, f, g, f=f, g=g)
        kc = ker_coker_sequence(g)
        _check(res, "ker-coker semi-exact", kc.report.semi_exact, gamma=g)
        _check(res, "ker-coker exact iff normal", kc.report.exact == kc.gamma_normal, gamma=g)
        closure, _ = subtractive_closure(g.cod, g.image)
        _, incl = submodule(g.cod, closure)
        _, coker = quotient(g.cod, g.image)
        _check(res, "closure-coker exact", classify_exactness(SequenceSpec((incl, coker))).exact, gamma=g)
        _, kin = submodule(g.dom, g.kernel)
        _, pk = quotient(g.dom, g.kernel)
        _check(res, "kernel-quotient exact", classify_exactness(SequenceSpec((kin, pk))).exact, gamma=g)


def suite_reg_sub(res: SuiteResult, rng: random.Random, max_size: int = 5) -> None:
    """Bourne quotients by subsemimodules: exactness and the subtractive criterion."""
    for U in universes(max_size):
        for M in U:
            for sub in enumerate_subsemimodules(M):
                res.instances += 1
                L = sub.elements
                closure, subtractive = subtractive_closure(M, L)
                _, iota = submodule(M, L)
                Lbar, iota_bar = submodule(M, closure)
                _, pi = quotient(M, sub)
                b = dict(M=M, L=L)
                plain = classify_exactness(SequenceSpec((iota, pi)))
                _check(res, "0->L->M->M/L->0 semi-exact", plain.semi_exact, **b)
                _check(res, "0->closure->M->M/L->0 exact", classify_exactness(SequenceSpec((iota_bar, pi))).exact, **b)
                into_bar = LinearMap(iota.dom, Lbar, tuple(sorted(closure).index(x) for x in iota.table))
                between = classify_exactness(SequenceSpec((into_bar,))).exact
                _check(res, "exact <=> L = Ker(pi_L)", plain.exact == (pi.kernel == L), **b)
                _check(res, "exact <=> 0->L->closure->0 exact", plain.exact == between, **b)
                _check(res, "exact <=> subtractive", plain.exact == subtractive, **b)


# ---------------------------------------------------------------------------
# projectivity suites


class _Verdicts:
    """Memoised relative projectivity verdicts."""

    def __init__(self):
        self.cache: dict = {}

    def __call__(self, P, M, flavor="e") -> bool:
        key = (P, M, flavor)
        if key not in self.cache:
            self.cache[key] = relative_projectivity(P, M, flavor).verdict
        return self.cache[key]


def suite_e_n(res: SuiteResult, rng: random.Random) -> None:
    """Hom-functor and lifting definitions agree on every pair; flavour implications."""
    for U in universes(4):
        for P in U:
            for M in U:
                res.instances += 1
                v = {fl: relative_projectivity(P, M, fl) for fl in ("plain", "k", "e")}
                normally = v["e"].cross_check["normally"]
                b = dict(P=P, M=M, verdicts={k: r.verdict for k, r in v.items()}, normally=normally)
                _check(res, "e <=> normally", v["e"].verdict == normally, **b)
                _check(res, "e => k", (not v["e"].verdict) or v["k"].verdict, **b)
                _check(res, "plain => k", (not v["plain"].verdict) or v["k"].verdict, **b)


def _ses_ending_in(P: FiniteSemimodule, U) -> list[tuple[str, LinearMap]]:
    """Normal epimorphisms onto ``P``: from every catalog object, plus the
    projections ``P ×_N M -> P`` of pullbacks along Bourne projections ``M -> N``."""
    out = []
    for B in U:
        for g in homs(B, P):
            if _normal_epi(g):
                out.append((f"from {B.name}", g))
    for M in U:
        for L in _sub_cache(M):
            N, pi = quotient(M, L)
            for h in homs(P, N):
                Q, p_P, _ = pullback(h, pi)
                out.append((f"pullback {M.name}/{sorted(L.elements)}", p_P))
    return out


def suite_char_k_proj(res: SuiteResult, rng: random.Random) -> None:
    """k-projective (relative to the whole universe) iff every SES ending in P right-splits."""
    verdict = _Verdicts()
    for U in universes(4):
        for P in U:
            res.instances += 1
            kproj = all(verdict(P, M, "k") for M in U)
            sess = _ses_ending_in(P, U)
            unsplit = next(((src, g) for src, g in sess if not right_inverses(g)), None)
            for _, g in sess:
                assert _normal_epi(g)
            _check(res, "k-projective <=> all SES ending in P right-split", kproj == (unsplit is None),
                   P=P, k_projective=kproj, unsplit=None if unsplit is None else (unsplit[0], unsplit[1]))


def suite_proj_implies_e(res: SuiteResult, rng: random.Random, n_max: int = 2) -> None:
    """Retracts of free semimodules (genuinely projective) are e-projective relative to the universe."""
    verdict = _Verdicts()
    nat, boo = universes(4)
    # over the naturals only the zero monoid is a retract of a finite free monoid
    for M in nat:
        res.instances += 1
        _check(res, "zero is e-projective", verdict(nat[0], M), M=M)
    frees = [free_module(BOOL, n) for n in range(1, n_max + 1)]
    for P in boo:
        retract = any(retract_check(P, F)[0] for F in frees if F.size >= P.size)
        if not retract:
            continue
        for M in boo:
            res.instances += 1
            _check(res, "retract of free => M-e-projective", verdict(P, M), P=P, M=M)
            _check(res, "retract of free => M-projective", verdict(P, M, "plain"), P=P, M=M)


def suite_retract_closure(res: SuiteResult, rng: random.Random) -> None:
    verdict = _Verdicts()
    for U in universes(4):
        for P in U:
            for K in U:
                if K.size > P.size or not retract_check(K, P)[0]:
                    continue
                for M in U:
                    res.instances += 1
                    _check(res, "retract of M-e-projective is M-e-projective",
                           (not verdict(P, M)) or verdict(K, M), P=P, K=K, M=M)


def suite_dsum(res: SuiteResult, rng: random.Random, max_sum: int = 8) -> None:
    verdict = _Verdicts()
    for U in universes(4):
        for i, P1 in enumerate(U):
            for P2 in U[i:]:
                if P1.size * P2.size > max_sum:
                    continue
                D, _, _ = direct_sum(P1, P2)
                for M in U:
                    res.instances += 1
                    _check(res, "P1⊕P2 M-e-projective <=> both are",
                           verdict(D, M) == (verdict(P1, M) and verdict(P2, M)), P1=P1, P2=P2, M=M)


def suite_lem182(res: SuiteResult, rng: random.Random) -> None:
    verdict = _Verdicts()
    for U in universes(4):
        for L in U:
            for sub in _sub_cache(L):
                K, _ = submodule(L, sub.elements)
                M, _ = quotient(L, sub)
                for P in U:
                    res.instances += 1
                    if verdict(P, L):
                        b = dict(P=P, L=L, K=sub.elements)
                        _check(res, "L-e-projective => K-e-projective", verdict(P, K), **b)
                        _check(res, "L-e-projective => M-e-projective", verdict(P, M), **b)


def suite_sumproj(res: SuiteResult, rng: random.Random) -> None:
    verdict = _Verdicts()
    for U in universes(4):
        for M in U:
            if not all(direct_complements(M, L.elements) for L in _sub_cache(M)):
                continue
            for P in U:
                res.instances += 1
                _check(res, "subtractive subs are summands => every P is M-e-projective", verdict(P, M), P=P, M=M)


def suite_lr_exact(res: SuiteResult, rng: random.Random) -> None:
    """Hom(P, -) on a short exact sequence: (P,f) injective and normal, Im (P,f) = Ker (P,g)."""
    for U in universes(4):
        for M in U:
            for sub in _sub_cache(M):
                K, iota = submodule(M, sub.elements)
                N, pi = quotient(M, sub)
                for P in U:
                    res.instances += 1
                    H_K, H_M, H_N = (HomMonoid(P, X, homs(P, X)) for X in (K, M, N))
                    Pf, Pg = induced_hom_map(H_K, H_M, iota), induced_hom_map(H_M, H_N, pi)
                    nf = classify_normality(Pf)
                    b = dict(P=P, M=M, L=sub.elements)
                    _check(res, "(P,f) injective and normal", nf.injective and nf.normal, **b)
                    _check(res, "Im (P,f) = Ker (P,g)", Pf.image == Pg.kernel, **b)


SUITES: dict[str, tuple[Callable, str]] = {
    "i-normal": (suite_i_normal, "sampled"),
    "hom": (suite_hom, "sampled"),
    "congruence": (suite_congruence, "sampled"),
    "s-char": (suite_s_char, "exhaustive"),
    "transfers": (suite_transfers, "sampled"),
    "pushout": (suite_pushout, "exhaustive"),
    "d-iso": (suite_d_iso, "exhaustive"),
    "exact": (suite_exact, "exhaustive+sampled"),
    "reg-sub": (suite_reg_sub, "exhaustive"),
    "e=n": (suite_e_n, "exhaustive"),
    "char-k-proj": (suite_char_k_proj, "exhaustive"),
    "proj-implies-e": (suite_proj_implies_e, "exhaustive"),
    "retract-closure": (suite_retract_closure, "exhaustive"),
    "dsum": (suite_dsum, "exhaustive"),
    "lem182": (suite_lem182, "exhaustive"),
    "sumproj": (suite_sumproj, "exhaustive"),
    "lr-exact": (suite_lr_exact, "exhaustive"),
}


def law_suite(name: str, samples: int = 100, seed: int = 0) -> SuiteResult:
    """Run a suite; ``samples`` sets the per-stream count of sampled suites."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    fn, _ = SUITES[name]
    res = SuiteResult(name, seed, samples)
    rng = random.Random(seed)
    try:
        fn(res, rng)
    except Counterexample as ce:
        res.passed = False
        res.counterexample = {
            "statement": ce.statement,
            "seed": seed,
            "instance": res.instances,
            "bundle": {k: _encode(v) for k, v in ce.bundle.items()},
        }
    return res
