"""
Adding electron spin
====================

A |j, jz> state mixes at most two (ml, sz) products. Because all ml states of
one (n, l) carry the same radial and angular energies, the mixture does too.
"""

from fractions import Fraction as F

from hydrokinetic import couple_spin, mixed_state_energy

cs = couple_spin(1, F(1, 2), F(1, 2))
for t in cs.terms:
    print(f"  {'+' if t.sign > 0 else '-'}sqrt({t.coeff_squared}) |ml={t.ml}, sz={t.sz}>")

print("\n2P3/2 multiplet, n = 2:")
for jz2 in (3, 1, -1, -3):
    eb = mixed_state_energy(couple_spin(1, F(3, 2), F(jz2, 2)), 2)
    print(f"  jz={F(jz2, 2)!s:>4}: KE_r={eb.keR} dynamic={eb.dynamic} "
          f"(theta {eb.keTheta}, phi {eb.kePhi}) E={eb.total}")
