"""Exact 2x2 matrices over the nonnegative rationals.

Used to certify that the sum of the left ideals

    E1   = {[[a, 0], [b, 0]]}
    N>=1 = {[[a, c], [b, d]] : a <= c, b <= d}

of 2x2 nonnegative real matrices is not direct, by exhibiting one matrix
with two different decompositions.  No floating point is involved.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RationalMatrix2:
    """``[[a, c], [b, d]]`` with exact nonnegative rational entries.

    Entries are stored row-major as ``(a, c, b, d)``.
    """

    entries: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        vals = tuple(Fraction(x) for x in self.entries)
        if len(vals) != 4:
            raise ValueError("a 2x2 matrix has four entries")
        if any(v < 0 for v in vals):
            raise ValueError(f"negative entry in {vals}")
        object.__setattr__(self, "entries", vals)

    @classmethod
    def of(cls, rows) -> "RationalMatrix2":
        (a, c), (b, d) = rows
        return cls((a, c, b, d))

    @property
    def rows(self):
        a, c, b, d = self.entries
        return ((a, c), (b, d))

    def __add__(self, other: "RationalMatrix2") -> "RationalMatrix2":
        return RationalMatrix2(tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __mul__(self, other: "RationalMatrix2") -> "RationalMatrix2":
        (a, c), (b, d) = self.rows
        (p, r), (q, s) = other.rows
        return RationalMatrix2.of(((a * p + c * q, a * r + c * s), (b * p + d * q, b * r + d * s)))

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows]

    def __repr__(self):
        return f"RationalMatrix2({self.to_json()})"


ZERO = RationalMatrix2((0, 0, 0, 0))


def in_E1(m: RationalMatrix2) -> bool:
    """Second column zero."""
    (_, c), (_, d) = m.rows
    return c == 0 and d == 0


def in_N1(m: RationalMatrix2) -> bool:
    """Each row is nondecreasing: ``a <= c`` and ``b <= d``."""
    (a, c), (b, d) = m.rows
    return a <= c and b <= d


# The two decompositions [1 0;0 0] + [0 1;0 0] = [0 0;0 0] + [1 1;0 0]
DISPLAYED = (
    (RationalMatrix2.of(((1, 0), (0, 0))), RationalMatrix2.of(((0, 1), (0, 0)))),
    (RationalMatrix2.of(((0, 0), (0, 0))), RationalMatrix2.of(((1, 1), (0, 0)))),
)


def check_decompositions(first, second) -> dict:
    """Compare two ``(E1 part, N>=1 part)`` decompositions of one matrix."""
    (e, n), (e2, n2) = first, second
    s1, s2 = e + n, e2 + n2
    membership = {
        "first_E1": in_E1(e),
        "first_N1": in_N1(n),
        "second_E1": in_E1(e2),
        "second_N1": in_N1(n2),
    }
    equal = s1 == s2
    distinct = e != e2
    return {
        "sum_first": s1.to_json(),
        "sum_second": s2.to_json(),
        "equal": equal,
        "components_differ": distinct,
        "membership": membership,
        "witnesses_non_direct": equal and distinct and all(membership.values()),
    }


def rational_witness_check(decompositions=None) -> dict:
    """Certify the non-direct sum with exact arithmetic, plus two controls.

    ``decompositions`` overrides the displayed pair.  The controls are the
    zero matrix (whose only decomposition is trivial) and a perturbed pair
    that must be reported as unequal.
    """
    main = check_decompositions(*(decompositions or DISPLAYED))
    zero = check_decompositions((ZERO, ZERO), (ZERO, ZERO))
    (e, n), (e2, n2) = DISPLAYED
    perturbed = check_decompositions((e, RationalMatrix2.of(((0, 2), (0, 0)))), (e2, n2))
    # E1 ∩ N>=1 = 0 and closure under left multiplication, on a grid of small rationals
    grid = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3)]
    mats = [RationalMatrix2(v) for v in itertools.product(grid, repeat=4)]
    meet_zero = all(m == ZERO for m in mats if in_E1(m) and in_N1(m))
    rng = random.Random(0)
    sample = rng.sample(mats, 40)
    left_ideals = all(in_E1(s * m) for s in sample for m in sample if in_E1(m)) and all(
        in_N1(s * m) for s in sample for m in sample if in_N1(m))
    passed = (main["witnesses_non_direct"] and not zero["components_differ"]
              and not perturbed["equal"] and meet_zero and left_ideals)
    return {
        "passed": passed,
        "displayed": main,
        "control_zero": zero,
        "control_perturbed": perturbed,
        "intersection_zero_on_grid": meet_zero,
        "left_ideals_on_sample": left_ideals,
    }
