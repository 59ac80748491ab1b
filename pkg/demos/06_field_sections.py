"""
Density sections and lobe counting
==================================

Sample |Psi|^2 on a plane, write it as CSV and PGM, and count maxima around
the brightest ring and along the ray through it.

Usage: python 06_field_sections.py [output-dir]
"""

import sys
from pathlib import Path

from hydrokinetic import GridSpec, build_state, lobe_summary, section
from hydrokinetic.grid import default_extent

out = Path(sys.argv[1] if len(sys.argv) > 1 else "section_output")
out.mkdir(parents=True, exist_ok=True)

for nlm in [(1, 0, 0), (3, 2, 2), (7, 3, 3)]:
    st = build_state(*nlm)
    spec = GridSpec("z", 0.0, default_extent(st), 256)
    raster = section(st, spec)
    raster.to_pgm(out / f"psi_{st.n}{st.l}{st.m}_z0.pgm")
    raster.to_csv(out / f"psi_{st.n}{st.l}{st.m}_z0.csv")
    print(f"{st.label}: extent {spec.extent:g} a -> {lobe_summary(st, raster, spec).describe()}")

# a 40 a window clips the outer shell of (7,3,3)
st = build_state(7, 3, 3)
spec = GridSpec("z", 0.0, 40.0, 256)
print("7,3,3 in a 40 a window:", lobe_summary(st, section(st, spec), spec).describe())
print("images written to", out)
