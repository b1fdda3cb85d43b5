"""Linear maps between finite semimodules and searches over hom-sets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .core import (
    BudgetExceeded,
    FiniteSemimodule,
    StructuralError,
    Subsemimodule,
    Violation,
    span,
)

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class LinearMap:
    """A total map ``dom -> cod`` given by the image of every element index."""

    dom: FiniteSemimodule
    cod: FiniteSemimodule
    table: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if other.dom != self.dom or other.cod != self.cod:
            raise StructuralError("pointwise sum of maps with different endpoints")
        add = self.cod.add
        return LinearMap(self.dom, self.cod, tuple(add[a][b] for a, b in zip(self.table, other.table)))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return compose(self, other)

    @cached_property
    def image(self) -> frozenset[int]:
        return frozenset(self.table)

    @cached_property
    def kernel(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.table) if y == 0)

    @property
    def is_zero(self) -> bool:
        return not any(self.table)

    @property
    def is_injective(self) -> bool:
        return len(self.image) == len(self.table)

    @property
    def is_surjective(self) -> bool:
        return len(self.image) == self.cod.size

    def __hash__(self):
        return hash((self.dom, self.cod, self.table))

    def __repr__(self):
        return f"LinearMap({self.dom.name} -> {self.cod.name}, {list(self.table)})"


def linearity_violations(dom: FiniteSemimodule, cod: FiniteSemimodule, table) -> list[Violation]:
    out = []
    if table[0] != 0:
        out.append(Violation("map(0)=0", (0,)))
    for a in dom.elements:
        for b in dom.elements:
            if table[dom.add[a][b]] != cod.add[table[a]][table[b]]:
                out.append(Violation("map(a+b)=map(a)+map(b)", (a, b)))
                break
        else:
            continue
        break
    for s in dom.scalar_range:
        for a in dom.elements:
            if table[dom.action[s][a]] != cod.action[s][table[a]]:
                out.append(Violation("map(s·a)=s·map(a)", (s, a)))
                break
        else:
            continue
        break
    return out


def _check_endpoints(dom: FiniteSemimodule, cod: FiniteSemimodule) -> None:
    if dom.scalars != cod.scalars:
        raise StructuralError(f"{dom.name} and {cod.name} have different scalar domains")


def make_linear_map(dom: FiniteSemimodule, cod: FiniteSemimodule, table: Iterable[int]):
    """Return a :class:`LinearMap`, or the list of violated linearity equations."""
    _check_endpoints(dom, cod)
    table = tuple(table)
    if len(table) != dom.size:
        raise StructuralError(f"map array has length {len(table)}, expected {dom.size}")
    for i, y in enumerate(table):
        if isinstance(y, bool) or not isinstance(y, int) or not 0 <= y < cod.size:
            raise StructuralError(f"map entry [{i}]={y!r} out of range for {cod.name}")
    violations = linearity_violations(dom, cod, table)
    if violations:
        return violations
    return LinearMap(dom, cod, table)


def linear_map(dom, cod, table) -> LinearMap:
    """Like :func:`make_linear_map` but raise on violations."""
    out = make_linear_map(dom, cod, table)
    if isinstance(out, list):
        raise StructuralError(f"not linear: {'; '.join(map(str, out))}")
    return out


def identity(M: FiniteSemimodule) -> LinearMap:
    return LinearMap(M, M, tuple(M.elements))


def zero_map(dom: FiniteSemimodule, cod: FiniteSemimodule) -> LinearMap:
    _check_endpoints(dom, cod)
    return LinearMap(dom, cod, (0,) * dom.size)


def compose(g: LinearMap, f: LinearMap) -> LinearMap:
    """``g o f``."""
    if f.cod != g.dom:
        raise StructuralError(f"cannot compose: {f.cod.name} is not {g.dom.name}")
    gt = g.table
    return LinearMap(f.dom, g.cod, tuple(gt[y] for y in f.table))


def generating_set(M: FiniteSemimodule) -> tuple[int, ...]:
    """An irredundant generating set, chosen greedily by element index."""
    gens: list[int] = []
    covered = span(M, ())
    for x in M.elements:
        if x not in covered:
            gens.append(x)
            covered = span(M, gens)
    for g in list(gens):
        rest = [h for h in gens if h != g]
        if len(span(M, rest)) == M.size:
            gens = rest
    return tuple(gens)


def enumerate_hom(
    P: FiniteSemimodule,
    M: FiniteSemimodule,
    budget: int = DEFAULT_BUDGET,
    allowed: Mapping[int, Iterable[int]] | None = None,
    injective: bool = False,
) -> list[LinearMap]:
    """All linear maps ``P -> M`` in lexicographic order of their tables.

    Only the images of a generating set are chosen; every other value
    follows by linearity and any clash prunes the branch.  ``allowed``
    restricts the value at given points, ``injective`` keeps injective maps
    only.  The naive candidate count ``|M|^(#generators)`` (after
    ``allowed``) must fit within ``budget``.
    """
    _check_endpoints(P, M)
    gens = generating_set(P)
    allow = {p: frozenset(vs) for p, vs in (allowed or {}).items()}
    if 0 in allow and 0 not in allow[0]:
        return []
    choices = [sorted(allow.get(g, M.elements)) for g in gens]
    if injective:
        if P.size > M.size:
            return []
        needed = math.perm(M.size - 1, len(gens)) if len(gens) < M.size else 0
        needed = min(needed, math.prod(len(c) for c in choices))
    else:
        needed = math.prod(len(c) for c in choices)
    if needed > budget:
        raise BudgetExceeded(f"Hom({P.name}, {M.name})", needed, budget)

    padd, madd = P.add, M.add
    pact, mact = P.action, M.action
    scal = P.scalar_range
    n = P.size
    results: list[tuple[int, ...]] = []

    def extend(img: list, known: list, used: set, x: int, y: int) -> bool:
        todo = [(x, y)]
        while todo:
            p, v = todo.pop()
            cur = img[p]
            if cur is not None:
                if cur != v:
                    return False
                continue
            if p in allow and v not in allow[p]:
                return False
            if injective:
                if v in used:
                    return False
                used.add(v)
            img[p] = v
            known.append(p)
            for q in list(known):
                todo.append((padd[p][q], madd[v][img[q]]))
            for s in scal:
                todo.append((pact[s][p], mact[s][v]))
        return True

    def search(k: int, img: list, known: list, used: set) -> None:
        if k == len(gens):
            results.append(tuple(img))
            return
        g = gens[k]
        for y in choices[k]:
            if img[g] is not None:
                if img[g] == y:
                    search(k + 1, img, known, used)
                continue
            img2, known2, used2 = list(img), list(known), set(used)
            if extend(img2, known2, used2, g, y):
                search(k + 1, img2, known2, used2)

    start = [None] * n
    start[0] = 0
    if 0 in allow and 0 not in allow[0]:
        return []
    search(0, start, [0], {0})
    results.sort()
    return [LinearMap(P, M, t) for t in results]


def kernel_image(f: LinearMap) -> tuple[Subsemimodule, Subsemimodule]:
    """``(Ker f, Im f)`` as subsemimodules of the domain and codomain."""
    return Subsemimodule(f.dom, f.kernel), Subsemimodule(f.cod, f.image)


@dataclass(frozen=True)
class NormalityReport:
    injective: bool
    surjective: bool
    k_normal: bool
    i_normal: bool
    injective_witness: tuple[int, int] | None = None
    surjective_witness: int | None = None
    k_witness: tuple[int, int] | None = None
    i_witness: int | None = None

    @property
    def normal(self) -> bool:
        return self.k_normal and self.i_normal

    @property
    def normal_epi(self) -> bool:
        return self.surjective and self.k_normal

    @property
    def normal_mono(self) -> bool:
        return self.injective and self.i_normal


def k_normal_witness(f: LinearMap) -> tuple[int, int] | None:
    """Least pair ``a < b`` with ``f(a) = f(b)`` but ``a+k != b+k'`` for all kernel ``k, k'``."""
    ker = sorted(f.kernel)
    add = f.dom.add
    t = f.table
    n = f.dom.size
    shifted = [frozenset(add[a][k] for k in ker) for a in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if t[a] == t[b] and shifted[a].isdisjoint(shifted[b]):
                return (a, b)
    return None


def classify_normality(f: LinearMap) -> NormalityReport:
    """Injectivity, surjectivity, k-normality and i-normality of ``f`` with witnesses."""
    from .subquot import subtractive_closure

    t = f.table
    inj_w = None
    seen: dict[int, int] = {}
    for a, y in enumerate(t):
        if y in seen:
            inj_w = (seen[y], a)
            break
        seen[y] = a
    missing = [y for y in f.cod.elements if y not in f.image]
    closure, _ = subtractive_closure(f.cod, f.image)
    outside = sorted(closure - f.image)
    k_w = None if inj_w is None else k_normal_witness(f)
    return NormalityReport(
        injective=inj_w is None,
        surjective=not missing,
        k_normal=k_w is None,
        i_normal=not outside,
        injective_witness=inj_w,
        surjective_witness=missing[0] if missing else None,
        k_witness=k_w,
        i_witness=outside[0] if outside else None,
    )


def _invariants(M: FiniteSemimodule) -> tuple:
    idem = sum(1 for x in M.elements if M.add[x][x] == x)
    orders = sorted(len(set(M.add[x])) for x in M.elements)
    return (M.size, idem, tuple(orders))


def are_isomorphic(M: FiniteSemimodule, N: FiniteSemimodule, budget: int = DEFAULT_BUDGET):
    """Search for a linear bijection ``M -> N``; return ``(found, iso_or_None)``.

    The inverse of a bijective linear map is linear, so a bijective member
    of ``Hom(M, N)`` is an isomorphism.
    """
    if M.scalars != N.scalars or _invariants(M) != _invariants(N):
        return False, None
    isos = enumerate_hom(M, N, budget=budget, injective=True)
    if not isos:
        return False, None
    return True, isos[0]


def inverse(f: LinearMap) -> LinearMap:
    if not (f.is_injective and f.is_surjective):
        raise StructuralError("map is not bijective")
    inv = [0] * f.cod.size
    for x, y in enumerate(f.table):
        inv[y] = x
    return LinearMap(f.cod, f.dom, tuple(inv))
