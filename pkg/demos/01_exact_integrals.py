"""
Exact radial and polar integrals
================================

Every integrand met in the energy calculation is either a polynomial times
e^{-beta r} or a polynomial in sin/cos. Both integrate to rationals.
"""

from fractions import Fraction

from hydrokinetic.exact import ExpPoly, TrigPoly

# r^4 e^{-2r/3}: the closed form is 4! (3/2)^5
f = ExpPoly({4: 1}, Fraction(2, 3))
print("int r^4 e^(-2r/3) dr =", f.integrate())

# derivatives stay in the same family
g = ExpPoly({1: 1}, Fraction(1, 2))
print("d/dr r e^(-r/2)     =", g.derivative())

# polar integrals use u = cos(theta); only odd powers of sin survive
print("int sin^3           =", TrigPoly([(1, 3, 0)]).integrate())
print("int cos^2 sin^3     =", TrigPoly([(1, 3, 2)]).integrate())

# sin^2 is stored as 1 - cos^2, so equal functions compare equal
sin = TrigPoly([(1, 1, 0)])
cos = TrigPoly([(1, 0, 1)])
print("sin^2 + cos^2 == 1 :", sin * sin + cos * cos == TrigPoly([(1, 0, 0)]))
