"""
Kinetic energy split into radial and angular parts
==================================================

The radial (intrinsic) term, the theta and phi terms, and the potential
for the 14 tabulated states, in units of E_n = E1/n^2.
"""

from hydrokinetic import build_state, decompose, table2
from hydrokinetic.energy import ri_term

print(f"{'state':>7} {'KE_r':>7} {'KE_th':>7} {'KE_ph':>7} {'V':>4} {'E':>4}")
for label, eb in table2():
    n = int(label.split(",")[0])
    en = n * n
    print(f"{label:>7} {str(eb.keR * en):>7} {str(eb.keTheta * en):>7} "
          f"{str(eb.kePhi * en):>7} {str(eb.potential * en):>4} {str(eb.total * en):>4}")

# the angular share is the same for every m and equals l(l+1) <1/r^2>
for m in range(-3, 4):
    st = build_state(7, 3, m)
    eb = decompose(st)
    assert eb.dynamic == 12 * -ri_term(st)
print("dynamic energy of (7,3,m):", decompose(build_state(7, 3, 0)).dynamic, "E1 for all m")
