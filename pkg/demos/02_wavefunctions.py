"""
Hydrogen eigenfunctions with rational coefficients
==================================================

States are built from the Laguerre and Legendre recurrences, normalized
exactly, and then pushed through the Hamiltonian symbolically.
"""

from hydrokinetic import build_state, expectation_r_power, verify_eigenvalue

for nlm in [(1, 0, 0), (2, 1, 0), (3, 2, 2), (7, 3, 3)]:
    st = build_state(*nlm)
    print(f"{st.label:>6}: c2 = {st.radial.c2}, beta = {st.radial.beta}, "
          f"polar n2 = {st.polar.n2}, E = {verify_eigenvalue(st)}")

# the radial polynomial of (7,3) carries the Laguerre pattern 720, -270, 30, -1
print("(7,3) radial poly:", [str(c) for c in build_state(7, 3, 0).radial.poly])

# a few radial moments, all exact
st = build_state(2, 1, 0)
print("<r^3> for 2p =", expectation_r_power(st, 3))
print("<1/r> for 2p =", expectation_r_power(st, -1))
