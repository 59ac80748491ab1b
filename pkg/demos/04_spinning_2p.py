"""
The 2p field as a rigid rotor
=============================

Treat the 2p(m=0) charge cloud as spinning rigidly about z with the total
orbital angular momentum sqrt(2) hbar, then compare its rotational energy
with the angular part of the operator result.
"""

from hydrokinetic import CODATA2018, spin2p_report
from hydrokinetic.angular import moment_integrals

radial, polar = moment_integrals()
print("moment of inertia = m a^2 *", radial, "*", polar, "=", radial * polar)

rep = spin2p_report(CODATA2018)
print(f"period T            {rep.period:.4e} s")
print(f"field frequency     {rep.f_field:.3e} Hz")
print(f"orbit frequency     {rep.f_particle:.3e} Hz")
print(f"v(3a)/c             {rep.v_3a_over_c:.4%}")
print(f"rotor energy        {rep.explicit_energy_E1} E1  ({rep.explicit_energy_J:.3e} J)")
print(f"operator energy     {rep.operator_energy_E1} E1")
print("agree:", rep.agreement)
