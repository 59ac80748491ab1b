"""Separated hydrogen eigenfunctions with exact squared normalizations.

Units: lengths in Bohr radii (a = 1), energies in Rydbergs (E1 = 1), so the
Hamiltonian reads ``H = -laplacian - 2/r`` and E_n = -1/n^2.

Psi(r, theta, phi) = sqrt(c2) R(r) * sqrt(n2) Theta(theta) * e^{i m phi}/sqrt(2 pi)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import ConsistencyError, DomainError
from .exact import ExpPoly, TrigPoly, to_rational

__all__ = [
    "RadialPart",
    "PolarPart",
    "AzimuthalPart",
    "HydrogenState",
    "laguerre_coeffs",
    "legendre_coeffs",
    "build_radial",
    "build_polar",
    "build_state",
    "verify_eigenvalue",
    "angular_eigenvalue",
    "expectation_r_power",
    "check_quantum_numbers",
]


# ---------------------------------------------------------------------------
# orthogonal polynomial recurrences (dense coefficient lists, index = power)
# ---------------------------------------------------------------------------


def _axpy(a: Fraction, x: list, y: list) -> list:
    out = [Fraction(0)] * max(len(x), len(y))
    for i, c in enumerate(x):
        out[i] += a * c
    for i, c in enumerate(y):
        out[i] += c
    return out


def _times_x(p: list) -> list:
    return [Fraction(0)] + list(p)


@lru_cache(maxsize=None)
def laguerre_coeffs(k: int, alpha: int) -> tuple[Fraction, ...]:
    """Coefficients of the generalized Laguerre polynomial L_k^(alpha)(x).

    Uses (j+1) L_{j+1} = (2j+1+alpha-x) L_j - (j+alpha) L_{j-1}.
    """
    if k < 0:
        raise DomainError("Laguerre degree must be >= 0")
    prev = [Fraction(1)]
    if k == 0:
        return tuple(prev)
    cur = [Fraction(1 + alpha), Fraction(-1)]
    for j in range(1, k):
        nxt = _axpy(Fraction(2 * j + 1 + alpha), cur, [-c for c in _times_x(cur)])
        nxt = _axpy(Fraction(-(j + alpha)), prev, nxt)
        nxt = [c / (j + 1) for c in nxt]
        prev, cur = cur, nxt
    return tuple(cur)


@lru_cache(maxsize=None)
def legendre_coeffs(l: int) -> tuple[Fraction, ...]:
    """Coefficients of P_l(x) from (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}."""
    prev = [Fraction(1)]
    if l == 0:
        return tuple(prev)
    cur = [Fraction(0), Fraction(1)]
    for j in range(1, l):
        nxt = _axpy(Fraction(-j), prev, [(2 * j + 1) * c for c in _times_x(cur)])
        nxt = [c / (j + 1) for c in nxt]
        prev, cur = cur, nxt
    return tuple(cur)


def _derivative(p) -> list:
    return [k * c for k, c in enumerate(p)][1:] or [Fraction(0)]


def _primitive(p) -> list[Fraction]:
    """Scale a rational polynomial to coprime integers with positive leading term."""
    p = [to_rational(c) for c in p]
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    lcm_den = reduce(math.lcm, (c.denominator for c in p), 1)
    ints = [int(c * lcm_den) for c in p]
    g = reduce(math.gcd, ints, 0) or 1
    sign = -1 if ints[-1] < 0 else 1
    return [Fraction(sign * c, g) for c in ints]


# ---------------------------------------------------------------------------
# separated factors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadialPart:
    """R(r) = sum(poly[k] r^k) e^{-beta r} with exact squared normalization ``c2``."""

    n: int
    l: int
    poly: tuple[Fraction, ...]
    beta: Fraction
    c2: Fraction

    def exppoly(self) -> ExpPoly:
        return ExpPoly.from_coeffs(self.poly, self.beta)

    def norm_integral(self) -> Fraction:
        """c2 * int R^2 r^2 dr (exactly 1 for a correctly built factor)."""
        R = self.exppoly()
        return self.c2 * (R * R).shift(2).integrate()

    def __call__(self, r):
        return self.exppoly()(r)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "c2": _fmt(self.c2),
            "poly": [_fmt(c) for c in self.poly],
            "beta": _fmt(self.beta),
        }


@dataclass(frozen=True)
class PolarPart:
    """Theta(theta) = sin^{|m|}(theta) * sum(cos_poly[k] cos^k(theta)); n2 is the squared norm."""

    l: int
    m: int
    cos_poly: tuple[Fraction, ...]
    n2: Fraction

    @property
    def m_abs(self) -> int:
        return abs(self.m)

    @property
    def sin_parity(self) -> int:
        return self.m_abs % 2

    def trigpoly(self) -> TrigPoly:
        return TrigPoly.from_sin_cos(self.m_abs, self.cos_poly)

    def norm_integral(self) -> Fraction:
        T = self.trigpoly()
        return self.n2 * (T * T).integrate(with_sin_measure=True)

    def __call__(self, theta):
        return self.trigpoly()(theta)

    def to_dict(self) -> dict:
        return {
            "l": self.l,
            "m": self.m,
            "sinParity": self.sin_parity,
            "sinPower": self.m_abs,
            "cosPoly": [_fmt(c) for c in self.cos_poly],
            "n2": _fmt(self.n2),
        }


@dataclass(frozen=True)
class AzimuthalPart:
    """e^{i m phi} / sqrt(2 pi).

    The 1/(2 pi) squared normalization always meets a full ``int_0^{2pi} d phi``,
    so only the exact products below are ever needed.
    """

    m: int

    norm_integral = Fraction(1)  # (1/2pi) * int |e^{im phi}|^2 d phi

    @property
    def n2(self) -> float:
        return 1.0 / (2.0 * math.pi)

    @property
    def second_derivative_factor(self) -> Fraction:
        """(1/2pi) int e^{-im phi} d^2/d phi^2 e^{im phi} d phi = -m^2."""
        return Fraction(-self.m * self.m)


@dataclass(frozen=True)
class HydrogenState:
    n: int
    l: int
    m: int
    radial: RadialPart
    polar: PolarPart
    azimuthal: AzimuthalPart

    @property
    def label(self) -> str:
        return f"{self.n},{self.l},{self.m}"

    def norm_integral(self) -> Fraction:
        return (
            self.radial.norm_integral()
            * self.polar.norm_integral()
            * self.azimuthal.norm_integral
        )

    def to_dict(self) -> dict:
        d = self.radial.to_dict()
        d["m"] = self.m
        d["polar"] = self.polar.to_dict()
        return d


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def check_quantum_numbers(n: int, l: int, m: int | None = None) -> None:
    if n < 1:
        raise DomainError(f"n must be >= 1 (got n={n})")
    if not 0 <= l < n:
        raise DomainError(f"l must satisfy 0 <= l < n (got l={l}, n={n})")
    if m is not None and abs(m) > l:
        raise DomainError(f"m must satisfy |m| <= l (got m={m}, l={l})")


@lru_cache(maxsize=None)
def build_radial(n: int, l: int) -> RadialPart:
    """R_{n,l}(r) = r^l L_{n-l-1}^{(2l+1)}(2r/n) e^{-r/n}, scaled so the r^l coefficient is 1."""
    check_quantum_numbers(n, l)
    lag = laguerre_coeffs(n - l - 1, 2 * l + 1)
    scale = Fraction(2, n)
    poly = [Fraction(0)] * l + [c * scale**k for k, c in enumerate(lag)]
    lead = poly[l]
    poly = tuple(c / lead for c in poly)
    beta = Fraction(1, n)
    R = ExpPoly.from_coeffs(poly, beta)
    c2 = 1 / (R * R).shift(2).integrate()
    return RadialPart(n, l, poly, beta, c2)


@lru_cache(maxsize=None)
def build_polar(l: int, m: int) -> PolarPart:
    """sin^{|m|} theta times d^{|m|}P_l/dx^{|m|} at x = cos theta, as primitive integers."""
    if l < 0:
        raise DomainError(f"l must be >= 0 (got l={l})")
    if abs(m) > l:
        raise DomainError(f"|m| must be <= l (got m={m}, l={l})")
    p = list(legendre_coeffs(l))
    for _ in range(abs(m)):
        p = _derivative(p)
    cos_poly = tuple(_primitive(p))
    T = TrigPoly.from_sin_cos(abs(m), cos_poly)
    n2 = 1 / (T * T).integrate(with_sin_measure=True)
    return PolarPart(l, m, cos_poly, n2)


def build_state(n: int, l: int, m: int) -> HydrogenState:
    check_quantum_numbers(n, l, m)
    return HydrogenState(n, l, m, build_radial(n, l), build_polar(l, m), AzimuthalPart(m))


# ---------------------------------------------------------------------------
# eigenvalue check
# ---------------------------------------------------------------------------


def angular_eigenvalue(polar: PolarPart) -> Fraction:
    """Return lambda with  (1/sin)(sin Theta')' - m^2 Theta/sin^2 = -lambda Theta.

    Both sides are multiplied through by sin^2 so the check stays polynomial;
    a nonzero residual raises ConsistencyError.
    """
    T = polar.trigpoly()
    sin1 = TrigPoly([(1, 1, 0)])
    lhs = sin1 * (sin1 * T.derivative()).derivative() - polar.m**2 * T
    ref = T.times_sin(2)
    key = max(ref.as_dict())
    lam = -lhs.as_dict().get(key, Fraction(0)) / ref.as_dict()[key]
    if not (lhs + lam * ref).is_zero():
        raise ConsistencyError(f"Theta_{polar.l},{polar.m} is not an eigenfunction of L^2")
    return lam


def verify_eigenvalue(state: HydrogenState) -> Fraction:
    """Apply the full Hamiltonian symbolically and return E (units of E1).

    The radial equation is multiplied by r^2:
        -(r^2 R')' + lambda R - 2 r R - E r^2 R == 0
    with lambda taken from the angular check. E is read off the top power and
    the remaining residual must vanish identically.
    """
    lam = angular_eigenvalue(state.polar)
    R = state.radial.exppoly()
    f = -(R.derivative().shift(2)).derivative() + lam * R - 2 * R.shift(1)
    r2R = R.shift(2)
    top = r2R.degree
    energy = f.coeff(top) / r2R.coeff(top)
    residual = f - energy * r2R
    if not residual.is_zero():
        raise ConsistencyError(
            f"state {state.label}: (H - E) Psi leaves residual {residual}; radial factor is wrong"
        )
    if energy != Fraction(-1, state.n**2):
        raise ConsistencyError(f"state {state.label}: eigenvalue {energy} != -1/n^2")
    return energy


def expectation_r_power(state: HydrogenState, k: int) -> Fraction:
    """Exact <r^k> in units of a^k."""
    power = 2 * state.l + 2 + k
    if power < 0:
        raise DomainError(f"<r^{k}> diverges for l={state.l} (needs k >= {-2 * state.l - 2})")
    R = state.radial.exppoly()
    integrand = ExpPoly([(c, p + 2 + k) for c, p in (R * R).terms], 2 * R.beta)
    return state.radial.c2 * integrand.integrate()
