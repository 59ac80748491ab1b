"""Exact energy decomposition of hydrogen eigenstates.

Units throughout: lengths in Bohr radii a, energies in E1 (the ground-state
binding energy), with hbar^2/2m = 1 and e^2 = 2 so that E_n = -1/n^2.
"""

from __future__ import annotations

from .angular import (
    CODATA2018,
    PhysicalConstants,
    couple_spin,
    mixed_state_energy,
    spin2p_report,
    spinning_period_2p,
)
from .energy import EnergyBreakdown, decompose, table2
from .errors import ConsistencyError, DivergentIntegralError, DomainError, UnsupportedIntegrandError
from .exact import ExpPoly, TrigPoly
from .grid import GridSpec, Raster, density, lobe_summary, section
from .quadrature import cross_check_state, gauss_laguerre, gauss_legendre
from .wavefunctions import HydrogenState, build_state, expectation_r_power, verify_eigenvalue

__version__ = "0.1.0"

__all__ = [
    "CODATA2018",
    "ConsistencyError",
    "DivergentIntegralError",
    "DomainError",
    "EnergyBreakdown",
    "ExpPoly",
    "GridSpec",
    "HydrogenState",
    "PhysicalConstants",
    "Raster",
    "TrigPoly",
    "UnsupportedIntegrandError",
    "build_state",
    "couple_spin",
    "cross_check_state",
    "decompose",
    "density",
    "expectation_r_power",
    "gauss_laguerre",
    "gauss_legendre",
    "lobe_summary",
    "mixed_state_energy",
    "section",
    "spin2p_report",
    "spinning_period_2p",
    "table2",
    "verify_eigenvalue",
]
