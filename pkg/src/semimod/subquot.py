"""Subsemimodules, subtractive closure, congruences and quotients."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .core import BudgetExceeded, FiniteSemimodule, StructuralError, Subsemimodule, span
from .morphisms import LinearMap

__all__ = [
    "Subsemimodule",
    "Congruence",
    "subtractive_closure",
    "is_subtractive",
    "generated_subsemimodule",
    "enumerate_subsemimodules",
    "subtractive_subsemimodules",
    "submodule",
    "generated_congruence",
    "enumerate_congruences",
    "kernel_congruence",
    "bourne_congruence",
    "quotient",
]


def subtractive_closure(M: FiniteSemimodule, L: Iterable[int]) -> tuple[frozenset[int], bool]:
    """``{m : m + l = l' for some l, l' in L}`` and whether it equals ``L``."""
    L = frozenset(L)
    add = M.add
    closure = frozenset(m for m in M.elements if any(add[m][l] in L for l in L))
    if L and len(span(M, L)) == len(L):
        # a subsemimodule has a subsemimodule as closure
        assert len(span(M, closure)) == len(closure), "closure of a subsemimodule is not closed"
    return closure, closure == L


def is_subtractive(M: FiniteSemimodule, L: Iterable[int]) -> bool:
    return subtractive_closure(M, L)[1]


def generated_subsemimodule(M: FiniteSemimodule, seed: Iterable[int]) -> Subsemimodule:
    return Subsemimodule(M, span(M, seed))


def enumerate_subsemimodules(M: FiniteSemimodule, budget: int = 100_000) -> list[Subsemimodule]:
    """Every subsemimodule of ``M``, smallest first, ties broken by sorted members."""
    start = span(M, ())
    found = {start}
    todo = [start]
    while todo:
        S = todo.pop()
        for x in M.elements:
            if x in S:
                continue
            T = span(M, S | {x})
            if T not in found:
                found.add(T)
                if len(found) > budget:
                    raise BudgetExceeded(f"subsemimodules of {M.name}", len(found), budget)
                todo.append(T)
    return [Subsemimodule(M, S) for S in sorted(found, key=lambda s: (len(s), sorted(s)))]


def subtractive_subsemimodules(M: FiniteSemimodule) -> list[Subsemimodule]:
    return [L for L in enumerate_subsemimodules(M) if is_subtractive(M, L.elements)]


def submodule(M: FiniteSemimodule, elements: Iterable[int], name: str | None = None):
    """``L`` as a semimodule in its own right, with its inclusion into ``M``.

    Members keep their relative order, so index 0 stays the zero.
    """
    members = sorted(set(elements))
    if not members or members[0] != 0:
        raise StructuralError("a subsemimodule must contain 0")
    pos = {x: i for i, x in enumerate(members)}
    try:
        add = tuple(tuple(pos[M.add[a][b]] for b in members) for a in members)
        action = None
        if not M.naturals:
            action = tuple(tuple(pos[M.action[s][a]] for a in members) for s in M.scalar_range)
    except KeyError:
        raise StructuralError(f"{members} is not closed in {M.name}") from None
    labels = tuple(M.label(x) for x in members)
    L = FiniteSemimodule(name or f"{M.name}{{{','.join(map(str, members))}}}", M.scalars, add, action, labels)
    return L, LinearMap(L, M, tuple(members))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True


def _normalize(labels: Sequence[int]) -> tuple[int, ...]:
    ids: dict[int, int] = {}
    return tuple(ids.setdefault(c, len(ids)) for c in labels)


@dataclass(frozen=True)
class Congruence:
    """A partition of ``parent`` stored as class ids ordered by least member."""

    parent: FiniteSemimodule
    classes: tuple[int, ...]

    @classmethod
    def from_labels(cls, parent: FiniteSemimodule, labels: Sequence[int]) -> "Congruence":
        return cls(parent, _normalize(labels))

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(max(self.classes) + 1)]
        for x, c in enumerate(self.classes):
            out[c].append(x)
        return tuple(tuple(b) for b in out)

    @property
    def count(self) -> int:
        return max(self.classes) + 1

    def related(self, a: int, b: int) -> bool:
        return self.classes[a] == self.classes[b]

    def pairs(self) -> list[tuple[int, int]]:
        """A spanning set of pairs: each member with the least member of its block."""
        return [(b[0], x) for b in self.blocks for x in b[1:]]

    def refines(self, other: "Congruence") -> bool:
        """Every pair related here is related in ``other``."""
        return all(other.related(b[0], x) for b in self.blocks for x in b[1:])

    def compatibility_witness(self):
        """First ``(a, b, c_or_scalar)`` showing the partition is not a congruence."""
        M = self.parent
        cls_ = self.classes
        for b in self.blocks:
            r = b[0]
            for a in b[1:]:
                for c in M.elements:
                    if cls_[M.add[a][c]] != cls_[M.add[r][c]]:
                        return ("+", r, a, c)
                for s in M.scalar_range:
                    if cls_[M.action[s][a]] != cls_[M.action[s][r]]:
                        return ("*", r, a, s)
        return None

    @property
    def is_compatible(self) -> bool:
        return self.compatibility_witness() is None

    def __repr__(self):
        return f"Congruence({self.parent.name}, {[list(b) for b in self.blocks]})"


def generated_congruence(M: FiniteSemimodule, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing ``pairs``.

    Union-find with a worklist: every pair that actually merges two classes
    is translated by each element and each scalar, and the results are fed
    back until nothing merges.
    """
    uf = _UnionFind(M.size)
    add, act = M.add, M.action
    scal = M.scalar_range
    todo = list(pairs)
    while todo:
        a, b = todo.pop()
        if not uf.union(a, b):
            continue
        ra, rb = add[a], add[b]
        todo.extend((ra[c], rb[c]) for c in M.elements)
        todo.extend((act[s][a], act[s][b]) for s in scal)
    return Congruence.from_labels(M, [uf.find(x) for x in M.elements])


def kernel_congruence(f: LinearMap) -> Congruence:
    """``a ~ b`` iff ``f(a) = f(b)``."""
    return Congruence.from_labels(f.dom, f.table)


def _sort_key(c: Congruence):
    return (-c.count, c.classes)


def enumerate_congruences(M: FiniteSemimodule, budget: int = 200_000) -> list[Congruence]:
    """All congruences of ``M``, finest first.

    Every congruence is a join of principal ones, so the search closes the
    set of principal congruences under joins.
    """
    principal = {}
    for a, b in itertools.combinations(M.elements, 2):
        c = generated_congruence(M, [(a, b)])
        principal.setdefault(c.classes, c)
    diagonal = Congruence(M, tuple(M.elements))
    found = {diagonal.classes: diagonal}
    found.update(principal)
    todo = list(principal.values())
    gens = list(principal.values())
    while todo:
        c = todo.pop()
        base = c.pairs()
        for p in gens:
            if p.refines(c):
                continue
            j = generated_congruence(M, base + p.pairs())
            if j.classes not in found:
                found[j.classes] = j
                if len(found) > budget:
                    raise BudgetExceeded(f"congruences of {M.name}", len(found), budget)
                todo.append(j)
    return sorted(found.values(), key=_sort_key)


def bourne_congruence(M: FiniteSemimodule, L: Iterable[int]) -> Congruence:
    """``m ~ m'`` iff ``m + l = m' + l'`` for some ``l, l'`` in ``L``."""
    L = sorted(set(L))
    add = M.add
    reach = [frozenset(add[m][l] for l in L) for m in M.elements]
    uf = _UnionFind(M.size)
    related = set()
    for a, b in itertools.combinations(M.elements, 2):
        if not reach[a].isdisjoint(reach[b]):
            uf.union(a, b)
            related.add((a, b))
    rho = Congruence.from_labels(M, [uf.find(x) for x in M.elements])
    # the relation is already transitive and compatible when L is a subsemimodule
    for b in rho.blocks:
        for x, y in itertools.combinations(b, 2):
            if (x, y) not in related:
                raise AssertionError(f"Bourne relation of {L} in {M.name} is not transitive")
    if not rho.is_compatible:
        raise AssertionError(f"Bourne relation of {L} in {M.name} is not a congruence")
    return rho


def quotient(M: FiniteSemimodule, by, name: str | None = None) -> tuple[FiniteSemimodule, LinearMap]:
    """``M/rho`` with its projection; ``by`` is a congruence or a subsemimodule.

    A subsemimodule ``L`` is turned into its Bourne congruence first, so the
    kernel of the projection is the subtractive closure of ``L``.
    """
    if isinstance(by, Congruence):
        rho = by
        tag = f"{M.name}/~"
    else:
        elements = by.elements if isinstance(by, Subsemimodule) else frozenset(by)
        if len(span(M, elements)) != len(elements):
            raise StructuralError(f"{sorted(elements)} is not a subsemimodule of {M.name}")
        rho = bourne_congruence(M, elements)
        tag = f"{M.name}/{{{','.join(map(str, sorted(elements)))}}}"
    if rho.parent != M:
        raise StructuralError("congruence belongs to a different semimodule")
    witness = rho.compatibility_witness()
    if witness is not None:
        raise StructuralError(f"partition is not a congruence: {witness}")
    cls_ = rho.classes
    reps = [b[0] for b in rho.blocks]
    add = tuple(tuple(cls_[M.add[a][b]] for b in reps) for a in reps)
    action = None
    if not M.naturals:
        action = tuple(tuple(cls_[M.action[s][a]] for a in reps) for s in M.scalar_range)
    labels = tuple(tuple(M.label(x) for x in b) for b in rho.blocks)
    Q = FiniteSemimodule(name or tag, M.scalars, add, action, labels)
    return Q, LinearMap(M, Q, cls_)
