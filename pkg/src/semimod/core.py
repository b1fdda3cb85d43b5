"""Finite semirings and finite semimodules given by operation tables.

Elements of every carrier are the integers ``0..n-1`` and the additive
identity is always index ``0``; the validators relabel on ingest so that
this holds.  Semimodules carry a scalar domain which is either a
:class:`FiniteSemiring` or :data:`NATURALS` (the semiring of non-negative
integers acting by repeated addition, never stored as a table).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "NATURALS",
    "Naturals",
    "Violation",
    "StructuralError",
    "ValidationError",
    "BudgetExceeded",
    "FiniteSemiring",
    "FiniteSemimodule",
    "validate_semiring",
    "validate_semimodule",
    "semiring",
    "semimodule",
    "builtin_instance",
    "regular_module",
    "additive_monoid",
    "zero_module",
    "cyclic_monoid",
    "direct_sum_module",
    "matrix_semiring",
    "cancellative_elements",
    "is_cancellative",
    "is_ideal_simple",
    "span",
    "Subsemimodule",
    "commutative_monoids",
    "small_universe",
    "B31_LITERAL_PARTIAL",
]


class Naturals:
    """The scalar domain of non-negative integers.

    Semimodules over it are exactly commutative monoids, so no action
    table is kept and linearity reduces to being a monoid map.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    name = "naturals"

    def __repr__(self):
        return "NATURALS"

    def __reduce__(self):
        return (Naturals, ())


NATURALS = Naturals()

ScalarDomain = Union["FiniteSemiring", Naturals]


@dataclass(frozen=True)
class Violation:
    """One failed axiom together with its lexicographically least witness."""

    axiom: str
    witness: tuple

    def __str__(self):
        return f"{self.axiom} fails at {self.witness}"


class StructuralError(ValueError):
    """Malformed input: wrong shapes, out-of-range entries, bad references."""


class ValidationError(ValueError):
    def __init__(self, what: str, violations: Sequence[Violation]):
        self.violations = list(violations)
        detail = "; ".join(str(v) for v in self.violations)
        super().__init__(f"{what} violates: {detail}")


class BudgetExceeded(RuntimeError):
    """A search would exceed its configured size bound."""

    def __init__(self, what: str, needed: int, budget: int):
        self.what = what
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what}: needs {needed} candidates, budget is {budget}")


Table = tuple[tuple[int, ...], ...]


def _as_table(raw, rows: int, cols: int, bound: int, what: str) -> Table:
    try:
        table = tuple(tuple(row) for row in raw)
    except TypeError:
        raise StructuralError(f"{what}: table must be a list of rows") from None
    if len(table) != rows or any(len(row) != cols for row in table):
        raise StructuralError(f"{what}: expected a {rows}x{cols} table")
    for i, row in enumerate(table):
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < bound:
                raise StructuralError(f"{what}: entry [{i}][{j}]={x!r} out of range 0..{bound - 1}")
    return table


def _swap_perm(n: int, k: int) -> list[int]:
    perm = list(range(n))
    perm[0], perm[k] = k, 0
    return perm


def _relabel_binary(table: Table, perm: Sequence[int]) -> Table:
    # perm[old] = new; perm is an involution here
    n = len(table)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return tuple(tuple(perm[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n))


@dataclass(frozen=True)
class FiniteSemiring:
    """A finite semiring ``(S, +, 0, *, 1)`` with zero at index 0."""

    name: str = field(compare=False)
    add: Table
    mul: Table
    one: int = 1
    labels: tuple | None = field(default=None, compare=False, repr=False)

    zero = 0

    @property
    def size(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(len(self.add))

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def label(self, x: int):
        return self.labels[x] if self.labels is not None else x

    @cached_property
    def _hash(self) -> int:
        return hash((self.add, self.mul, self.one))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteSemiring({self.name!r}, size={self.size})"


@dataclass(frozen=True)
class FiniteSemimodule:
    """A finite left semimodule over a scalar domain.

    ``action[s][m]`` is ``s*m``; it is ``None`` in naturals mode.
    """

    name: str = field(compare=False)
    scalars: ScalarDomain
    add: Table
    action: Table | None = None
    labels: tuple | None = field(default=None, compare=False, repr=False)

    zero = 0

    @property
    def size(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(len(self.add))

    @property
    def naturals(self) -> bool:
        return self.scalars is NATURALS

    @property
    def scalar_range(self) -> range:
        return range(0) if self.naturals else self.scalars.elements

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def act(self, s: int, m: int) -> int:
        return self.action[s][m]

    def total(self, xs: Iterable[int]) -> int:
        acc = 0
        add = self.add
        for x in xs:
            acc = add[acc][x]
        return acc

    def label(self, x: int):
        return self.labels[x] if self.labels is not None else x

    def renamed(self, name: str) -> "FiniteSemimodule":
        return FiniteSemimodule(name, self.scalars, self.add, self.action, self.labels)

    @cached_property
    def _hash(self) -> int:
        return hash((self.add, self.action, self.scalars))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteSemimodule({self.name!r}, size={self.size}, scalars={_scalar_name(self.scalars)})"


def _scalar_name(scalars: ScalarDomain) -> str:
    return "naturals" if scalars is NATURALS else scalars.name


# ---------------------------------------------------------------------------
# validation


def _first(axiom: str, cases: Iterable[tuple], bad) -> list[Violation]:
    for case in cases:
        if bad(*case):
            return [Violation(axiom, case)]
    return []


def _monoid_violations(add: Table, labels: tuple[str, str, str]) -> list[Violation]:
    n = len(add)
    el = range(n)
    out: list[Violation] = []
    out += _first(labels[0], itertools.product(el, el, el),
                  lambda a, b, c: add[add[a][b]][c] != add[a][add[b][c]])
    out += _first(labels[1], itertools.product(el, el), lambda a, b: add[a][b] != add[b][a])
    out += _first(labels[2], ((a,) for a in el), lambda a: add[a][0] != a or add[0][a] != a)
    return out


def semiring_violations(add: Table, mul: Table, one: int) -> list[Violation]:
    n = len(add)
    el = range(n)
    out: list[Violation] = []
    if one == 0:
        out.append(Violation("zero≠one", (0, one)))
    out += _monoid_violations(add, ("(a+b)+c=a+(b+c)", "a+b=b+a", "a+0=a"))
    out += _first("(ab)c=a(bc)", itertools.product(el, el, el),
                  lambda a, b, c: mul[mul[a][b]][c] != mul[a][mul[b][c]])
    out += _first("one is not multiplicative identity", ((a,) for a in el),
                  lambda a: mul[one][a] != a or mul[a][one] != a)
    out += _first("a·0=0=0·a", ((a,) for a in el), lambda a: mul[a][0] != 0 or mul[0][a] != 0)
    out += _first("a(b+c)=ab+ac", itertools.product(el, el, el),
                  lambda a, b, c: mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
    out += _first("(a+b)c=ac+bc", itertools.product(el, el, el),
                  lambda a, b, c: mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]])
    return out


def validate_semiring(add, mul, zero: int = 0, one: int = 1, name: str = "S", labels=None):
    """Validate raw tables; return a :class:`FiniteSemiring` or the list of violations.

    Structural problems (shapes, ranges) raise :class:`StructuralError`.
    The carrier is relabeled so that ``zero`` becomes index 0.
    """
    try:
        n = len(add)
    except TypeError:
        raise StructuralError(f"{name}: add must be a table") from None
    if n == 0:
        raise StructuralError(f"{name}: empty carrier")
    add_t = _as_table(add, n, n, n, f"{name}.add")
    mul_t = _as_table(mul, n, n, n, f"{name}.mul")
    for what, x in (("zero", zero), ("one", one)):
        if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < n:
            raise StructuralError(f"{name}: {what}={x!r} out of range")
    if zero != 0:
        perm = _swap_perm(n, zero)
        add_t, mul_t = _relabel_binary(add_t, perm), _relabel_binary(mul_t, perm)
        one = perm[one]
        if labels is not None:
            labels = tuple(labels[perm[i]] for i in range(n))
    violations = semiring_violations(add_t, mul_t, one)
    if violations:
        return violations
    return FiniteSemiring(name, add_t, mul_t, one, tuple(labels) if labels is not None else None)


def semimodule_violations(scalars: ScalarDomain, add: Table, action: Table | None) -> list[Violation]:
    out = _monoid_violations(add, ("(m+m′)+m″=m+(m′+m″)", "m+m′=m′+m", "m+0=m"))
    if scalars is NATURALS:
        return out
    S = scalars
    el = range(len(add))
    sc = S.elements
    act = action
    out += _first("s(m+m′)=sm+sm′", itertools.product(sc, el, el),
                  lambda s, a, b: act[s][add[a][b]] != add[act[s][a]][act[s][b]])
    out += _first("(s+s′)m=sm+s′m", itertools.product(sc, sc, el),
                  lambda s, t, m: act[S.add[s][t]][m] != add[act[s][m]][act[t][m]])
    out += _first("(ss′)m=s(s′m)", itertools.product(sc, sc, el),
                  lambda s, t, m: act[S.mul[s][t]][m] != act[s][act[t][m]])
    out += _first("1·m=m", ((m,) for m in el), lambda m: act[S.one][m] != m)
    out += _first("s·0=0", ((s,) for s in sc), lambda s: act[s][0] != 0)
    out += _first("0·m=0", ((m,) for m in el), lambda m: act[0][m] != 0)
    return out


def _coerce_scalars(scalars) -> ScalarDomain:
    if scalars is NATURALS or scalars == "naturals":
        return NATURALS
    if isinstance(scalars, str):
        found = builtin_instance(scalars)
        if not isinstance(found, FiniteSemiring):
            raise StructuralError(f"{scalars!r} is not a semiring")
        return found
    if isinstance(scalars, FiniteSemiring):
        return scalars
    raise StructuralError(f"unknown scalar domain {scalars!r}")


def validate_semimodule(scalars, add, action=None, zero: int = 0, name: str = "M", labels=None):
    """Validate raw tables; return a :class:`FiniteSemimodule` or the list of violations."""
    scalars = _coerce_scalars(scalars)
    try:
        m = len(add)
    except TypeError:
        raise StructuralError(f"{name}: add must be a table") from None
    if m == 0:
        raise StructuralError(f"{name}: empty carrier")
    add_t = _as_table(add, m, m, m, f"{name}.add")
    if isinstance(zero, bool) or not isinstance(zero, int) or not 0 <= zero < m:
        raise StructuralError(f"{name}: zero={zero!r} out of range")
    if scalars is NATURALS:
        if action is not None:
            raise StructuralError(f"{name}: naturals mode takes no action table")
        act_t = None
    else:
        if action is None:
            raise StructuralError(f"{name}: action table required over {scalars.name}")
        act_t = _as_table(action, scalars.size, m, m, f"{name}.action")
    if zero != 0:
        perm = _swap_perm(m, zero)
        add_t = _relabel_binary(add_t, perm)
        if act_t is not None:
            act_t = tuple(tuple(perm[row[perm[x]]] for x in range(m)) for row in act_t)
        if labels is not None:
            labels = tuple(labels[perm[i]] for i in range(m))
    violations = semimodule_violations(scalars, add_t, act_t)
    if violations:
        return violations
    return FiniteSemimodule(name, scalars, add_t, act_t, tuple(labels) if labels is not None else None)


def semiring(add, mul, zero=0, one=1, name="S", labels=None) -> FiniteSemiring:
    """Like :func:`validate_semiring` but raise :class:`ValidationError` on violations."""
    out = validate_semiring(add, mul, zero, one, name, labels)
    if isinstance(out, list):
        raise ValidationError(name, out)
    return out


def semimodule(scalars, add, action=None, zero=0, name="M", labels=None) -> FiniteSemimodule:
    out = validate_semimodule(scalars, add, action, zero, name, labels)
    if isinstance(out, list):
        raise ValidationError(name, out)
    return out


# ---------------------------------------------------------------------------
# catalog

_BOOLEAN = ((0, 1), (1, 1)), ((0, 0), (0, 1))
# B(3,1): 1+1=2, 1+2=1, 2+2=2, 2*2=2
_B31 = (
    ((0, 1, 2), (1, 2, 1), (2, 1, 2)),
    ((0, 0, 0), (0, 1, 2), (0, 2, 2)),
)
_F2 = ((0, 1), (1, 0)), ((0, 0), (0, 1))

# The values printed for B(3,1) in the source example: 1+2=1, 2+2=0, 2*2=0,
# with 1+1 left open.  See corpus.b31_table_report.
B31_LITERAL_PARTIAL = {"add": {(1, 2): 1, (2, 2): 0}, "mul": {(2, 2): 0}}


def regular_module(S: FiniteSemiring, name: str | None = None) -> FiniteSemimodule:
    """``S`` as a left module over itself."""
    return FiniteSemimodule(name or S.name, S, S.add, S.mul, S.labels)


def additive_monoid(S: FiniteSemiring, name: str | None = None) -> FiniteSemimodule:
    """The additive monoid of ``S`` in naturals mode."""
    return FiniteSemimodule(name or S.name, NATURALS, S.add, None, S.labels)


def zero_module(scalars=NATURALS, name: str = "Zero") -> FiniteSemimodule:
    scalars = _coerce_scalars(scalars)
    action = None if scalars is NATURALS else tuple((0,) for _ in scalars.elements)
    return FiniteSemimodule(name, scalars, ((0,),), action)


def cyclic_monoid(index: int, period: int, name: str | None = None) -> FiniteSemimodule:
    """The monoid generated by ``x`` with ``(index+period)x = index*x``.

    Elements are ``0, x, 2x, ..., (index+period-1)x`` at indices ``0..``.
    ``C(0, n)`` is the cyclic group of order ``n``.
    """
    if period < 1 or index < 0:
        raise StructuralError("cyclic monoid needs period >= 1 and index >= 0")
    n = index + period

    def reduce(k):
        return k if k < n else index + (k - index) % period

    add = tuple(tuple(reduce(a + b) for b in range(n)) for a in range(n))
    return FiniteSemimodule(name or f"C({index},{period})", NATURALS, add, None)


def direct_sum_module(M: FiniteSemimodule, N: FiniteSemimodule, name: str | None = None) -> FiniteSemimodule:
    """Componentwise structure on ``M x N``; pair ``(m, n)`` sits at ``m*|N| + n``."""
    if M.scalars != N.scalars:
        raise StructuralError(f"direct sum of {M.name} and {N.name}: scalar domains differ")
    q = N.size
    pairs = [(m, n) for m in M.elements for n in N.elements]
    add = tuple(tuple(M.add[a][c] * q + N.add[b][d] for (c, d) in pairs) for (a, b) in pairs)
    action = None
    if not M.naturals:
        action = tuple(tuple(M.action[s][a] * q + N.action[s][b] for (a, b) in pairs)
                       for s in M.scalar_range)
    labels = tuple((M.label(a), N.label(b)) for a, b in pairs)
    return FiniteSemimodule(name or f"{M.name}⊕{N.name}", M.scalars, add, action, labels)


def matrix_semiring(S: FiniteSemiring, name: str | None = None) -> FiniteSemiring:
    """2x2 matrices over ``S``; entries ``(a, b, c, d)`` read row-major."""
    els = list(itertools.product(S.elements, repeat=4))
    index = {e: i for i, e in enumerate(els)}
    p, t = S.plus, S.times

    def madd(x, y):
        return tuple(p(u, v) for u, v in zip(x, y))

    def mmul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (p(t(a, e), t(b, g)), p(t(a, f), t(b, h)), p(t(c, e), t(d, g)), p(t(c, f), t(d, h)))

    add = tuple(tuple(index[madd(x, y)] for y in els) for x in els)
    mul = tuple(tuple(index[mmul(x, y)] for y in els) for x in els)
    one = index[(S.one, 0, 0, S.one)]
    return FiniteSemiring(name or f"M2({S.name})", add, mul, one, tuple(els))


def _split_top_level(name: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in name:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "⊕+":
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


_SEMIRINGS = {
    "B": lambda: FiniteSemiring("B", *_BOOLEAN),
    "B31": lambda: FiniteSemiring("B31", *_B31),
    "F2": lambda: FiniteSemiring("F2", *_F2),
}


@lru_cache(maxsize=None)
def _builtin_semiring(name: str) -> FiniteSemiring | None:
    if name in _SEMIRINGS:
        return _SEMIRINGS[name]()
    m = re.fullmatch(r"M2\((.+)\)", name)
    if m:
        inner = _builtin_semiring(m.group(1))
        if inner is None:
            raise StructuralError(f"unknown semiring {m.group(1)!r}")
        return matrix_semiring(inner, name)
    return None


@lru_cache(maxsize=None)
def _builtin_module(name: str, scalars: ScalarDomain) -> FiniteSemimodule:
    parts = _split_top_level(name)
    if len(parts) > 1:
        acc = _builtin_module(parts[0], scalars)
        for part in parts[1:]:
            acc = direct_sum_module(acc, _builtin_module(part, scalars))
        return acc.renamed(name)
    if name == "Zero":
        return zero_module(scalars)
    S = _builtin_semiring(name)
    if S is not None:
        if scalars is NATURALS:
            return additive_monoid(S)
        if scalars == S:
            return regular_module(S)
        raise StructuralError(f"{name} is not a module over {scalars.name}")
    m = re.fullmatch(r"C\((\d+),\s*(\d+)\)", name)
    monoid = None
    if name == "Z2":
        monoid = cyclic_monoid(0, 2, "Z2")
    elif m:
        monoid = cyclic_monoid(int(m.group(1)), int(m.group(2)), name)
    if monoid is None:
        raise StructuralError(f"unknown builtin instance {name!r}")
    if scalars is NATURALS:
        return monoid
    return _idempotent_over(monoid, scalars)


def _idempotent_over(M: FiniteSemimodule, S: FiniteSemiring) -> FiniteSemimodule:
    # A B-module is an idempotent monoid with the obvious action.
    if S != _builtin_semiring("B"):
        raise StructuralError(f"{M.name} has no builtin action of {S.name}")
    out = validate_semimodule(S, M.add, ((0,) * M.size, tuple(M.elements)), name=M.name)
    if isinstance(out, list):
        raise StructuralError(f"{M.name} is not a module over {S.name}: {out[0]}")
    return out


def builtin_instance(name: str, scalars=None) -> FiniteSemiring | FiniteSemimodule:
    """Look up a catalog instance.

    Semiring names (``B``, ``B31``, ``F2``, ``M2(X)``) give the semiring when
    ``scalars`` is omitted.  Otherwise the result is a semimodule: ``Z2``,
    ``Zero``, ``C(k,n)``, a semiring viewed over the naturals or over itself,
    or a direct sum written ``X⊕Y`` (``X+Y`` also accepted).
    """
    name = name.strip()
    if scalars is None:
        S = _builtin_semiring(name)
        if S is not None:
            return S
        scalars = NATURALS
    return _builtin_module(name, _coerce_scalars(scalars))


# ---------------------------------------------------------------------------
# elementwise structure


def cancellative_elements(X: FiniteSemiring | FiniteSemimodule) -> frozenset[int]:
    """``K+``: elements ``x`` for which ``y -> x+y`` is injective."""
    n = X.size
    return frozenset(x for x in X.elements if len(set(X.add[x])) == n)


def is_cancellative(X: FiniteSemiring | FiniteSemimodule) -> bool:
    return len(cancellative_elements(X)) == X.size


def span(M: FiniteSemimodule, seed: Iterable[int]) -> frozenset[int]:
    """Least subsemimodule of ``M`` containing ``seed``."""
    found = {0}
    todo = [x for x in seed]
    add, act = M.add, M.action
    scal = M.scalar_range
    while todo:
        x = todo.pop()
        if x in found:
            continue
        found.add(x)
        new = [add[x][y] for y in found]
        new += [act[s][x] for s in scal]
        todo.extend(y for y in new if y not in found)
    return frozenset(found)


@dataclass(frozen=True)
class Subsemimodule:
    """A subset of ``parent`` closed under addition and the scalar action."""

    parent: FiniteSemimodule
    elements: frozenset[int]

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements)

    @property
    def is_full(self) -> bool:
        return len(self.elements) == self.parent.size

    @property
    def is_zero(self) -> bool:
        return self.elements == frozenset({0})

    def __repr__(self):
        return f"Subsemimodule({self.parent.name}, {sorted(self.elements)})"


def is_ideal_simple(M: FiniteSemimodule) -> tuple[bool, frozenset[int] | None]:
    """Whether ``{0}`` and ``M`` are the only subsemimodules.

    On ``False`` the witness is the least proper nonzero subsemimodule
    generated by a single element.
    """
    if M.size < 2:
        raise ValueError("degenerate: M={0}")
    witnesses = []
    for m in range(1, M.size):
        sub = span(M, [m])
        if len(sub) < M.size:
            witnesses.append(sub)
    if not witnesses:
        return True, None
    return False, min(witnesses, key=lambda s: (len(s), sorted(s)))


# ---------------------------------------------------------------------------
# small universes


def _canonical(add: Table) -> Table:
    n = len(add)
    best = None
    for rest in itertools.permutations(range(1, n)):
        perm = (0,) + rest
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        t = tuple(tuple(perm[add[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        if best is None or t < best:
            best = t
    return best


@lru_cache(maxsize=None)
def commutative_monoids(n: int) -> tuple[Table, ...]:
    """Addition tables of all commutative monoids of order ``n`` up to isomorphism.

    Backtracking over the upper triangle with associativity pruning; each
    class is represented by its least relabeled table.
    """
    if n < 1:
        return ()
    t = [[None] * n for _ in range(n)]
    for a in range(n):
        t[0][a] = t[a][0] = a
    cells = [(a, b) for a in range(1, n) for b in range(a, n)]
    found = set()

    def consistent():
        for a in range(1, n):
            for b in range(1, n):
                ab = t[a][b]
                if ab is None:
                    continue
                for c in range(1, n):
                    bc = t[b][c]
                    if bc is None:
                        continue
                    left, right = t[ab][c], t[a][bc]
                    if left is not None and right is not None and left != right:
                        return False
        return True

    def fill(k):
        if k == len(cells):
            found.add(_canonical(tuple(tuple(row) for row in t)))
            return
        a, b = cells[k]
        for v in range(n):
            t[a][b] = t[b][a] = v
            if consistent():
                fill(k + 1)
        t[a][b] = t[b][a] = None

    fill(0)
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def small_universe(scalars=NATURALS, max_size: int = 4) -> tuple[FiniteSemimodule, ...]:
    """All semimodules of size ``<= max_size`` up to isomorphism.

    Supported scalar domains: the naturals (commutative monoids) and the
    Boolean semiring (idempotent commutative monoids).
    """
    scalars = _coerce_scalars(scalars)
    B = _builtin_semiring("B")
    if scalars is not NATURALS and scalars != B:
        raise StructuralError("universes are available over the naturals and B only")
    out = []
    for n in range(1, max_size + 1):
        for i, add in enumerate(commutative_monoids(n)):
            M = FiniteSemimodule(f"U{n}.{i}", NATURALS, add)
            if scalars is NATURALS:
                out.append(M)
            elif all(add[x][x] == x for x in range(n)):
                out.append(FiniteSemimodule(f"U{n}.{i}", scalars, add, ((0,) * n, tuple(range(n)))))
    return tuple(out)
