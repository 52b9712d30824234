"""
Homology of matching complexes and of VE_m / E_m
================================================

Reduced integral homology, computed exactly.  The matching complexes are
small; the E_m complexes grow quickly with m and the number of colors, so
only low skeleta are built here.
"""

import time

from tbt.complexes import build_E, build_VE, homology, matching_complex, nu


def show(c, top):
    rows = homology(c, top)
    cells = [f"{r}" + ("+" + "+".join(f"Z/{t}" for t in tors) if tors else "") for r, tors in rows]
    return " ".join(cells)


print("matching complexes (reduced Betti numbers, torsion after +)")
for m in range(4, 10):
    c = matching_complex(m)
    print(f"  m={m}: f={c.f_vector()}  H~: {show(c, c.dim)}  must vanish through {nu(m) - 1}")

print("\nVE_m and E_m, two colors, degree 0 only")
for m in range(2, 7):
    t0 = time.perf_counter()
    ve = build_VE(m, 2, max_dim=1)
    e = build_E(m, 2, max_dim=1)
    print(f"  m={m}: |VE|={ve.count(0):>5} H~0={show(ve, 0):<3} |E|={e.count(0):>5} H~0={show(e, 0):<3}"
          f" ({time.perf_counter() - t0:.1f}s)")
