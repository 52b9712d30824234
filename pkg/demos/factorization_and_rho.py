"""
Factoring group elements and reading off rho
=============================================

Every group element splits into untwisted pieces and conjugates of
``iota1[s, g]``.  The germinal twist at the all-zeros point is then a
retraction onto G that moves by at most one generator per factor.
"""

import random

from tbt.actions import Cyclic2Action, HoughtonAction, ThompsonFAction
from tbt.elements import compose, equal
from tbt.factorization import factorize, generating_graph, iota0, rho
from tbt.sampling import random_group_element

rng = random.Random(1)

for a in (Cyclic2Action(), ThompsonFAction(), HoughtonAction(3)):
    s = a.orbit_representatives()[0]
    h = random_group_element(a, rng)
    fw = factorize(h, s)
    kinds = [at.kind for at in fw.atoms]
    print(f"{a.name}: {len(h.pieces)} pieces -> {len(fw)} atoms {kinds}")
    print("  recomposes:", equal(fw.evaluate(), h))
    print("  generating graph edges:", str(generating_graph(a)).replace("\n", " "))

# rho undoes iota0 and ignores twists away from the basepoint
a = ThompsonFAction()
x0, x1 = a.generators()
print("\nrho(iota0(x0)) == x0:", rho(iota0(a, x0)) == x0)

h = random_group_element(a, rng)
for g in (x0, x1, a.invert(x0)):
    before, after = rho(h), rho(compose(iota0(a, g), h))
    print("  prepending iota0 multiplies rho by g:", after == a.multiply(g, before))
