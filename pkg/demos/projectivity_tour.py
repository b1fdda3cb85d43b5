"""Four flavours of relative projectivity on small monoids.

Run: python3 demos/projectivity_tour.py
"""

from semimod.core import builtin_instance, small_universe
from semimod.projectivity import FLAVORS, relative_projectivity

B31 = builtin_instance("B31", "naturals")
Z2 = builtin_instance("Z2", "naturals")

print("Z2 relative to B31:")
for fl in FLAVORS:
    rep = relative_projectivity(Z2, B31, fl)
    print(f"  {fl:9s} verdict={rep.verdict} witness={rep.witness}")

# the lifting flavours are ordered, but plain lifting does not force the hom-functor flavour
U = small_universe("naturals", 4)
for P in U:
    for M in U:
        plain = relative_projectivity(P, M, "plain")
        e = relative_projectivity(P, M, "e")
        if plain.verdict and not e.verdict:
            print(f"\n{P.name} is {M.name}-projective but not {M.name}-e-projective")
            print("  table:", P.add)
            print("  failure:", e.witness)
            break
    else:
        continue
    break
