"""
An independent floating-point check
===================================

Gauss-Laguerre and Gauss-Legendre rules, built by Newton iteration, redo
every energy integral numerically.
"""

from hydrokinetic import build_state, cross_check_state, gauss_laguerre
from hydrokinetic.energy import TABLE2_STATES

rule = gauss_laguerre(8)
print("8-point Laguerre integrates x^15 e^-x to",
      sum(w * x**15 for x, w in zip(rule.nodes, rule.weights)), "(15! = 1307674368000)")

for label, nlm in TABLE2_STATES:
    print(f"{label:>7}: worst relative deviation {cross_check_state(build_state(*nlm)):.1e}")
