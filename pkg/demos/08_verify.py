"""
Running every invariant at once
===============================

The same suite the `hydrokinetic verify` command runs.
"""

from hydrokinetic.verification import run_verification

for result in run_verification(n_max=8):
    print(result.line())
