"""Potential, intrinsic (radial) and dynamic (angular) kinetic energies.

Everything is in units of E1 with a = 1, where hbar^2/2m = 1 and e^2 = 2.
The angular kinetic energy is split into a theta part and a phi part by
keeping each operator's 1/sin factors with its own integration variable:

    KE_theta = RI * n2 int Theta (sin Theta')' d theta
    KE_phi   = RI * n2 int Theta^2 / sin d theta * (-m^2)
    RI       = -c2 int R^2 dr
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConsistencyError
from .exact import ExpPoly, TrigPoly
from .wavefunctions import HydrogenState, build_state

__all__ = [
    "EnergyBreakdown",
    "E1_EV",
    "potential_energy",
    "ke_radial",
    "ke_polar",
    "ke_azimuthal",
    "ri_term",
    "polar_term",
    "azimuthal_term",
    "radial_integrands",
    "polar_integrands",
    "decompose",
    "table2",
    "TABLE2_STATES",
]

# display only
E1_EV = 13.605693

_SIN = TrigPoly([(1, 1, 0)])


@dataclass(frozen=True)
class EnergyBreakdown:
    keR: Fraction
    keTheta: Fraction
    kePhi: Fraction
    potential: Fraction

    @property
    def dynamic(self) -> Fraction:
        return self.keTheta + self.kePhi

    @property
    def totalKE(self) -> Fraction:
        return self.keR + self.keTheta + self.kePhi

    @property
    def total(self) -> Fraction:
        return self.totalKE + self.potential

    def fields(self) -> dict[str, Fraction]:
        d = asdict(self)
        d["dynamic"] = self.dynamic
        d["totalKE"] = self.totalKE
        d["total"] = self.total
        return d

    def scaled(self, w: Fraction) -> "EnergyBreakdown":
        return EnergyBreakdown(self.keR * w, self.keTheta * w, self.kePhi * w, self.potential * w)

    def __add__(self, other: "EnergyBreakdown") -> "EnergyBreakdown":
        return EnergyBreakdown(
            self.keR + other.keR,
            self.keTheta + other.keTheta,
            self.kePhi + other.kePhi,
            self.potential + other.potential,
        )

    def to_dict(self, with_floats: bool = True) -> dict:
        out: dict = {k: f"{v.numerator}/{v.denominator}" for k, v in self.fields().items()}
        if with_floats:
            out["float"] = {k: float(v) for k, v in self.fields().items()}
            out["eV"] = {k: float(v) * E1_EV for k, v in self.fields().items()}
        return out


# -- integrands (shared with the quadrature cross-check) ---------------------


@lru_cache(maxsize=2048)
def radial_integrands(state: HydrogenState) -> dict[str, ExpPoly]:
    """The three radial integrands, each already multiplied by c2.

    ``potential``  c2 r R^2            (times -e^2 = -2)
    ``intrinsic``  c2 R (r^2 R')'      (times -hbar^2/2m = -1)
    ``ri``         c2 R^2              (times -1)
    """
    R = state.radial.exppoly()
    c2 = state.radial.c2
    return {
        "potential": c2 * (R * R).shift(1),
        "intrinsic": c2 * (R * R.derivative().shift(2).derivative()),
        "ri": c2 * (R * R),
    }


@lru_cache(maxsize=2048)
def polar_integrands(state: HydrogenState) -> dict[str, TrigPoly | None]:
    """Polar integrands (no sin measure folded in), each times n2.

    ``norm``   n2 Theta^2 sin
    ``theta``  n2 Theta (sin Theta')'
    ``phi``    n2 Theta^2 / sin, or None for m = 0 where it multiplies -m^2 = 0
    """
    p = state.polar
    T = p.trigpoly()
    out: dict[str, TrigPoly | None] = {
        "norm": p.n2 * (T * T).times_sin(),
        "theta": p.n2 * (T * (_SIN * T.derivative()).derivative()),
        "phi": None,
    }
    if p.m_abs:
        out["phi"] = p.n2 * TrigPoly.from_sin_cos(2 * p.m_abs - 1, _square(p.cos_poly))
    return out


def _square(poly) -> list[Fraction]:
    out = [Fraction(0)] * (2 * len(poly) - 1)
    for i, a in enumerate(poly):
        for j, b in enumerate(poly):
            out[i + j] += a * b
    return out


# -- the four energy terms ---------------------------------------------------


def ri_term(state: HydrogenState) -> Fraction:
    """-(hbar^2/2m) c2 int R^2 dr; negative, minus the <1/r^2> expectation."""
    return -radial_integrands(state)["ri"].integrate()


def polar_term(state: HydrogenState) -> Fraction:
    return polar_integrands(state)["theta"].integrate() * state.azimuthal.norm_integral


def azimuthal_term(state: HydrogenState) -> Fraction:
    f = polar_integrands(state)["phi"]
    if f is None:
        return Fraction(0)
    return f.integrate() * state.azimuthal.second_derivative_factor


def _angular_norm(state: HydrogenState) -> Fraction:
    return polar_integrands(state)["norm"].integrate() * state.azimuthal.norm_integral


def potential_energy(state: HydrogenState) -> Fraction:
    return -2 * radial_integrands(state)["potential"].integrate() * _angular_norm(state)


def ke_radial(state: HydrogenState) -> Fraction:
    return -radial_integrands(state)["intrinsic"].integrate() * _angular_norm(state)


def ke_polar(state: HydrogenState) -> Fraction:
    if state.l == 0:
        return Fraction(0)
    return ri_term(state) * polar_term(state)


def ke_azimuthal(state: HydrogenState) -> Fraction:
    if state.m == 0:
        return Fraction(0)
    return ri_term(state) * azimuthal_term(state)


def decompose(state: HydrogenState) -> EnergyBreakdown:
    """All energy components of ``state``; raises if E != -1/n^2."""
    eb = EnergyBreakdown(
        keR=ke_radial(state),
        keTheta=ke_polar(state),
        kePhi=ke_azimuthal(state),
        potential=potential_energy(state),
    )
    if eb.total != Fraction(-1, state.n**2):
        raise ConsistencyError(f"state {state.label}: total {eb.total} != -1/{state.n}^2")
    return eb


# tabulated row order; each +-m row is represented by its positive-m member
TABLE2_STATES: tuple[tuple[str, tuple[int, int, int]], ...] = (
    ("1,0,0", (1, 0, 0)),
    ("2,0,0", (2, 0, 0)),
    ("3,0,0", (3, 0, 0)),
    ("2,1,0", (2, 1, 0)),
    ("2,1,±1", (2, 1, 1)),
    ("3,1,0", (3, 1, 0)),
    ("3,1,±1", (3, 1, 1)),
    ("3,2,0", (3, 2, 0)),
    ("3,2,∓1", (3, 2, 1)),
    ("3,2,±2", (3, 2, 2)),
    ("7,3,0", (7, 3, 0)),
    ("7,3,±1", (7, 3, 1)),
    ("7,3,±2", (7, 3, 2)),
    ("7,3,±3", (7, 3, 3)),
)


def table2() -> list[tuple[str, EnergyBreakdown]]:
    return [(label, decompose(build_state(*nlm))) for label, nlm in TABLE2_STATES]
