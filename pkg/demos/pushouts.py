"""Pushouts as quotients of a direct sum, checked against every cocone we can build.

Run: python3 demos/pushouts.py
"""

from semimod.category import c_pushout, cocone_catalog, pushout, verify_pushout_universal
from semimod.core import builtin_instance
from semimod.morphisms import identity, zero_map
from semimod.subquot import submodule

M = builtin_instance("B31", "naturals")
L, iota = submodule(M, {0, 2})
Zero = builtin_instance("Zero", "naturals")

# gluing {0,2} to zero collapses B31 onto Z2
res = pushout(iota, zero_map(L, Zero))
print("pushout of {0,2} -> B31 and {0,2} -> 0 has", res.apex.size, "elements:", res.apex.add)

# the span (iota, iota): generated congruence versus the explicit relation
po, cp = pushout(iota, iota), c_pushout(iota, iota)
print("\npushout classes:  ", [list(b) for b in po.rho.blocks])
print("C-pushout classes:", [list(b) for b in cp.rho.blocks])
print("pushout congruence refines the other:", po.rho.refines(cp.rho))

cocones = cocone_catalog(iota, iota, [M, builtin_instance("Z2", "naturals")])
for name, cand in (("pushout", po), ("C-pushout", cp)):
    check = verify_pushout_universal(iota, iota, cand.cocone, cocones)
    note = "" if check.passed else f" ({check.failure[0]})"
    print(f"{name}: universal against {len(cocones)} cocones -> {check.passed}{note}")

# along an identity nothing is glued
print("\npushout along identities is M again:", pushout(identity(M), identity(M)).apex.size == M.size)
