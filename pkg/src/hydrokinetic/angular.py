"""Explicit spinning-field analysis of the 2p state and spin-1/2 coupling.

Physical units (SI) only appear here. The Coulomb coupling is always
eliminated first through e^2 = hbar^2 / (m a), so the elementary charge never
enters an SI formula on its own.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path

from .energy import EnergyBreakdown, decompose
from .errors import ConsistencyError, DomainError
from .wavefunctions import build_state, expectation_r_power

__all__ = [
    "PhysicalConstants",
    "CODATA2018",
    "SpinTerm",
    "SpinCoupledState",
    "total_L_magnitude",
    "l_squared",
    "moment_integrals",
    "spinning_period_2p",
    "spinning_period_from_moment",
    "dynamic_energy_explicit_2p",
    "particle_orbit_frequency_2p",
    "field_velocity",
    "couple_spin",
    "mixed_state_energy",
    "SpinReport",
    "spin2p_report",
]


@dataclass(frozen=True)
class PhysicalConstants:
    electron_mass: float  # kg
    hbar: float  # J s
    bohr_radius: float  # m
    light_speed: float  # m/s
    E1: float  # J

    def __post_init__(self):
        e1 = self.hbar**2 / (2 * self.electron_mass * self.bohr_radius**2)
        if not math.isclose(e1, self.E1, rel_tol=5e-6):
            raise DomainError(
                f"E1={self.E1} J inconsistent with hbar^2/(2 m a^2)={e1} J"
            )

    @classmethod
    def from_json(cls, path: str | Path) -> "PhysicalConstants":
        """Load overrides from a JSON object; missing keys keep CODATA-2018 values.

        If ``E1`` is not given it is recomputed from the other three so the
        set stays self-consistent.
        """
        data = json.loads(Path(path).read_text())
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise DomainError(f"unknown constant(s): {sorted(unknown)}")
        base = {k: getattr(CODATA2018, k) for k in known}
        base.update({k: float(v) for k, v in data.items()})
        if "E1" not in data:
            base["E1"] = base["hbar"] ** 2 / (2 * base["electron_mass"] * base["bohr_radius"] ** 2)
        return cls(**base)

    def with_mass(self, mass: float) -> "PhysicalConstants":
        """Rescale the mass, keeping hbar and a fixed (E1 follows)."""
        return replace(self, electron_mass=mass, E1=self.hbar**2 / (2 * mass * self.bohr_radius**2))


CODATA2018 = PhysicalConstants(
    electron_mass=9.1093837015e-31,
    hbar=1.054571817e-34,
    bohr_radius=5.29177210903e-11,
    light_speed=299792458.0,
    E1=2.1798723611035e-18,
)


# ---------------------------------------------------------------------------
# angular momentum magnitudes
# ---------------------------------------------------------------------------


def l_squared(l: int) -> int:
    if l < 0:
        raise DomainError(f"l must be >= 0 (got {l})")
    return l * (l + 1)


def total_L_magnitude(l: int) -> float:
    """|L| / hbar = sqrt(l(l+1))."""
    return math.sqrt(l_squared(l))


def moment_integrals(n: int = 2, l: int = 1, m: int = 0) -> tuple[Fraction, Fraction]:
    """Exact pieces of the rigid-rotation moment of a state, in units a = 1.

    Returns ``(radial, polar)`` with
        radial = c2 int R^2 r^4 dr           (= <r^2>)
        polar  = n2 int Theta^2 sin^3 d theta  (= <sin^2 theta>)
    and the azimuthal factor (1/2pi) int d phi = 1. For the 2p state the
    radial piece is int (1/24) r^6 e^{-r} dr = 720/24.
    """
    st = build_state(n, l, m)
    R = st.radial.exppoly()
    radial = st.radial.c2 * (R * R).shift(4).integrate()
    T = st.polar.trigpoly()
    polar = st.polar.n2 * (T * T).times_sin(3).integrate()
    return radial, polar


def spinning_period_2p(c: PhysicalConstants = CODATA2018) -> float:
    """Rotation period T = 24 pi m a^2 / (sqrt(2) hbar) of the 2p(m=0) field.

    Cross-checked against :func:`spinning_period_from_moment`; a relative
    disagreement above 1e-12 raises ConsistencyError.
    """
    closed = 24.0 * c.electron_mass * math.pi * c.bohr_radius**2 / (math.sqrt(2.0) * c.hbar)
    integral = spinning_period_from_moment(c)
    if abs(closed - integral) > 1e-12 * closed:
        raise ConsistencyError(f"period mismatch: closed form {closed} vs moment integral {integral}")
    return closed


def spinning_period_from_moment(c: PhysicalConstants = CODATA2018, n: int = 2, l: int = 1, m: int = 0) -> float:
    """Solve |L| = sum over the field of (2 pi r sin / T) r sin dm for T.

    |L| = (2 pi m a^2 / T) * radial * polar  =  sqrt(l(l+1)) hbar
    """
    radial, polar = moment_integrals(n, l, m)
    moment = radial * polar  # exact, units m a^2
    return 2.0 * math.pi * c.electron_mass * c.bohr_radius**2 * float(moment) / (
        total_L_magnitude(l) * c.hbar
    )


def dynamic_energy_explicit_2p(
    c: PhysicalConstants = CODATA2018, T: float | None = None
) -> tuple[float, Fraction]:
    """Kinetic energy of the rigidly spinning 2p field.

    E = (1/2) (2 pi / T)^2 m a^2 * radial * polar.

    Returns ``(joules, ratio)``: the SI value at period ``T`` (default: the
    angular-momentum period) and the exact ratio E/E1 = l(l+1)/(radial*polar)
    obtained by substituting that period symbolically. The ratio is checked
    against the operator value KE_theta + KE_phi of (2,1,0).
    """
    radial, polar = moment_integrals(2, 1, 0)
    if T is None:
        T = spinning_period_2p(c)
    joules = 0.5 * (2.0 * math.pi / T) ** 2 * c.electron_mass * c.bohr_radius**2 * float(radial * polar)
    # T^2 = (2 pi m a^2 I)^2 / (l(l+1) hbar^2), E1 = hbar^2 / (2 m a^2)  =>  E/E1 = l(l+1)/I
    ratio = Fraction(l_squared(1)) / (radial * polar)
    operator = decompose(build_state(2, 1, 0)).dynamic
    if ratio != operator:
        raise ConsistencyError(f"explicit dynamic energy {ratio} != operator value {operator}")
    return joules, ratio


def particle_orbit_frequency_2p(c: PhysicalConstants = CODATA2018) -> float:
    """Classical orbit frequency from e^2/r^2 = m r w^2 at r^3 = <r^3>_2p.

    With e^2 = hbar^2/(m a):  w = hbar / (sqrt(<r^3>) m a^2).
    """
    r3 = expectation_r_power(build_state(2, 1, 0), 3)
    omega = c.hbar / (math.sqrt(r3) * c.electron_mass * c.bohr_radius**2)
    return omega / (2.0 * math.pi)


def field_velocity(r: float, sin_theta: float, T: float, c: PhysicalConstants = CODATA2018) -> float:
    """Tangential field speed 2 pi (r a) sin(theta) / T, with ``r`` in Bohr radii."""
    if r < 0:
        raise DomainError("r must be >= 0")
    if not 0.0 <= sin_theta <= 1.0:
        raise DomainError("sin(theta) must lie in [0, 1]")
    if T <= 0:
        raise DomainError("period must be positive")
    return 2.0 * math.pi * r * c.bohr_radius * sin_theta / T


# ---------------------------------------------------------------------------
# spin coupling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpinTerm:
    coeff_squared: Fraction
    sign: int
    l: int
    ml: int
    sz: Fraction


@dataclass(frozen=True)
class SpinCoupledState:
    l: int
    j: Fraction
    jz: Fraction
    terms: tuple[SpinTerm, ...] = field(default=())

    def weight_sum(self) -> Fraction:
        return sum((t.coeff_squared for t in self.terms), Fraction(0))


def _half(x) -> Fraction:
    q = Fraction(x)
    if (2 * q).denominator != 1 or q.denominator == 1:
        raise DomainError(f"{x} is not a half-odd-integer")
    return q


def couple_spin(l: int, j, jz) -> SpinCoupledState:
    """|j, jz> for orbital l coupled with spin 1/2 (Condon-Shortley signs).

    j = l + 1/2:  +sqrt((l+jz+1/2)/(2l+1)) |jz-1/2, up> + sqrt((l-jz+1/2)/(2l+1)) |jz+1/2, down>
    j = l - 1/2:  -sqrt((l-jz+1/2)/(2l+1)) |jz-1/2, up> + sqrt((l+jz+1/2)/(2l+1)) |jz+1/2, down>
    """
    if l < 0:
        raise DomainError("l must be >= 0")
    j, jz = _half(j), _half(jz)
    half = Fraction(1, 2)
    if j not in (l + half, l - half) or j < half:
        raise DomainError(f"j must be l +- 1/2 and >= 1/2 (got j={j}, l={l})")
    if abs(jz) > j:
        raise DomainError(f"|jz| must be <= j (got jz={jz}, j={j})")
    den = 2 * l + 1
    plus = (l + jz + half) / den
    minus = (l - jz + half) / den
    if j == l + half:
        cands = [(plus, 1, jz - half, half), (minus, 1, jz + half, -half)]
    else:
        cands = [(minus, -1, jz - half, half), (plus, 1, jz + half, -half)]
    terms = tuple(
        SpinTerm(w, s, l, int(ml), sz) for w, s, ml, sz in cands if w != 0 and abs(ml) <= l
    )
    state = SpinCoupledState(l, j, jz, terms)
    if state.weight_sum() != 1:
        raise ConsistencyError(f"coupling weights sum to {state.weight_sum()}")
    return state


def mixed_state_energy(coupled: SpinCoupledState, n: int) -> EnergyBreakdown:
    """Weight-averaged energy breakdown of a spin-coupled state."""
    total = EnergyBreakdown(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    for t in coupled.terms:
        total = total + decompose(build_state(n, t.l, t.ml)).scaled(t.coeff_squared)
    if total.total != Fraction(-1, n * n):
        raise ConsistencyError(f"mixed state total {total.total} != -1/{n}^2")
    return total


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpinReport:
    period: float
    period_from_moment: float
    f_field: float
    f_particle: float
    v_3a: float
    v_3a_over_c: float
    explicit_energy_J: float
    explicit_energy_E1: Fraction
    operator_energy_E1: Fraction
    agreement: bool

    def to_dict(self) -> dict:
        return {
            "T_s": self.period,
            "T_moment_s": self.period_from_moment,
            "f_field_Hz": self.f_field,
            "f_particle_Hz": self.f_particle,
            "v_3a_m_per_s": self.v_3a,
            "v_3a_over_c": self.v_3a_over_c,
            "explicit_dynamic_J": self.explicit_energy_J,
            "explicit_dynamic_E1": _fmt(self.explicit_energy_E1),
            "operator_dynamic_E1": _fmt(self.operator_energy_E1),
            "agreement": self.agreement,
        }


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def spin2p_report(c: PhysicalConstants = CODATA2018) -> SpinReport:
    T = spinning_period_2p(c)
    v = field_velocity(3.0, 1.0, T, c)
    joules, ratio = dynamic_energy_explicit_2p(c, T)
    op = decompose(build_state(2, 1, 0)).dynamic
    # the Gaussian-consistent E1 (CODATA's tabulated E1 differs at ~1e-9)
    e1 = c.hbar**2 / (2 * c.electron_mass * c.bohr_radius**2)
    agree = ratio == op and math.isclose(joules, float(op) * e1, rel_tol=1e-12)
    return SpinReport(
        period=T,
        period_from_moment=spinning_period_from_moment(c),
        f_field=1.0 / T,
        f_particle=particle_orbit_frequency_2p(c),
        v_3a=v,
        v_3a_over_c=v / c.light_speed,
        explicit_energy_J=joules,
        explicit_energy_E1=ratio,
        operator_energy_E1=op,
        agreement=agree,
    )
