"""
A tour of the groupoid
======================

Bricks, partitions, elements, and the spectrum of an element, built up
one step at a time.  Run with ``python3 demos/groupoid_tour.py``.
"""

import random

from tbt.actions import Cyclic2Action, TrivialAction
from tbt.cantor import Partition, brick, greedy_merge, is_dyadic_partition, is_partition, refine_to_dyadic
from tbt.elements import compose, direct_sum, equal, germinal_twist_set, identity, simple_split, twist
from tbt.forests import as_forest, spectrum
from tbt.relations import check_relations
from tbt.words import evaluate

# A brick fixes a finite prefix for some of the colors.  Five bricks on three
# colors can tile the cube without any two of them being halves of a common
# brick, so no sequence of merges gets anywhere.
words = [("0", "0", "0"), ("1", "1", "1"), ("0", "1", ""), ("", "0", "1"), ("1", "", "0")]
pinwheel = Partition(tuple(brick(1, {c: w for c, w in zip((1, 2, 3), ws) if w}) for ws in words), 1)
print("pinwheel:", pinwheel)
print("  partition?", is_partition(pinwheel), " dyadic?", is_dyadic_partition(pinwheel))
print("  after greedy merging:", len(greedy_merge(pinwheel)), "bricks")
fine = refine_to_dyadic(pinwheel)
print("  dyadic refinement has", len(fine), "bricks:", fine)

# Elements are lists of pieces.  The simple split x[s] sends the two halves
# along color s onto two whole cubes.
a = TrivialAction(2)
x1, x2 = simple_split(a, 1), simple_split(a, 2)
print("\nx[1] =", x1)
print("x[1] == x[2]?", equal(x1, x2))

# Splitting along 1 then 2 on both halves agrees with the opposite order up
# to swapping the middle two cubes.
lhs = evaluate("(x[2] ⊕ x[2]) • x[1]", a)
rhs = evaluate("p[(2 3),4] • (x[1] ⊕ x[1]) • x[2]", a)
print("split order commutes up to a permutation:", equal(lhs, rhs))

# The spectrum lists the colors an untwisted element really uses.  Sums
# bind tighter than composition, hence the extra parentheses.
h = evaluate("p[(2 3 5),5] • (((x[1] ⊕ id[1]) • x[2]) ⊕ x[3]) • x[4]", TrivialAction(4))
print("\nspectrum of the worked example:", sorted(spectrum(h)))
print("spectrum of x[1]^-1 • x[1]:", sorted(spectrum(compose(x1.inverse(), x1))))
print("forest bricks of (x[2] ⊕ id[1]) • x[1]:", as_forest(compose(direct_sum(x2, identity(a)), x1)))

# With the swap group acting on two colors, twists enter.
c2 = Cyclic2Action()
t = twist(c2, "s")
print("\ngerminal twists of tau[s]:", germinal_twist_set(t))
print("germinal twists of iota1[1,s]:", germinal_twist_set(evaluate("iota1[1,s]", c2)))

# Finally, the eight basic relations on random instances.
rep = check_relations(c2, random.Random(0), count=50)
for name, bad in rep.failures.items():
    print(f"  {name:<16} {'ok' if not bad else f'{bad} failures'}")
