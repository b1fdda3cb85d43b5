"""The three-element semiring B31: a short exact sequence that splits on one side only.

Run: python3 demos/b31_walkthrough.py
"""

from semimod.core import builtin_instance
from semimod.exactness import SequenceSpec, classify_exactness, find_splittings
from semimod.morphisms import are_isomorphic, enumerate_hom
from semimod.subquot import quotient, submodule, subtractive_closure

S = builtin_instance("B31")
print("B31 addition:", S.add)
print("B31 multiplication:", S.mul)

M = builtin_instance("B31", "naturals")
Z2 = builtin_instance("Z2", "naturals")

closure, subtractive = subtractive_closure(M, {0, 2})
print("\n{0,2} is subtractive:", subtractive)

L, iota = submodule(M, {0, 2})
Q, pi = quotient(M, {0, 2})
print("B31/{0,2} is isomorphic to Z2:", are_isomorphic(Q, Z2)[0])

report = classify_exactness(SequenceSpec((iota, pi)))
for p in report.positions:
    print(f"  position {p.index} ({p.obj}): exact={p.exact}")

split = find_splittings(iota, pi)
print("\nleft splitting (as a map into B31):", [iota(x) for x in split.left.table])
print("right splitting:", split.right)
print("Hom(Z2, B31):", [h.table for h in enumerate_hom(Z2, M)])
print("so no map Z2 -> B31 can split the projection")
