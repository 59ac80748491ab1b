"""Exact calculus on the two function classes the energy integrals live in.

``ExpPoly``   sum of c_k r^k e^{-beta r}, integrated over [0, inf).
``TrigPoly``  sum of c sin^s(theta) cos^k(theta) with s in {0, 1}, integrated
              over [0, pi].

All coefficients are :class:`fractions.Fraction`; nothing here touches floats
except the ``__call__`` evaluators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DivergentIntegralError, UnsupportedIntegrandError

Rational = Fraction

__all__ = [
    "Rational",
    "ExpPoly",
    "TrigPoly",
    "factorial",
    "integrate_radial",
    "integrate_polar",
    "differentiate_radial",
    "differentiate_polar",
    "to_rational",
]


def to_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction (floats are refused)."""
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact coefficients")
    return Fraction(x)


@lru_cache(maxsize=None)
def factorial(k: int) -> int:
    return math.factorial(k)


def _poly_mul(a: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, ca in a.items():
        for j, cb in b.items():
            out[i + j] = out.get(i + j, 0) + ca * cb
    return out


# ---------------------------------------------------------------------------
# polynomial x exponential
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExpPoly:
    """``sum(c * r**k for (c, k) in terms) * exp(-beta * r)``.

    ``terms`` is kept sorted by power with no zero coefficients, so two equal
    functions compare equal.
    """

    terms: tuple[tuple[Fraction, int], ...]
    beta: Fraction

    def __init__(self, terms: Iterable[tuple[object, int]] | Mapping[int, object] = (), beta=1):
        if isinstance(terms, Mapping):
            items = [(c, k) for k, c in terms.items()]
        else:
            items = list(terms)
        merged: dict[int, Fraction] = {}
        for c, k in items:
            if k < 0:
                raise ValueError(f"negative power r^{k} is not representable")
            merged[k] = merged.get(k, Fraction(0)) + to_rational(c)
        object.__setattr__(
            self, "terms", tuple((c, k) for k, c in sorted(merged.items()) if c != 0)
        )
        object.__setattr__(self, "beta", to_rational(beta))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[object], beta=1) -> "ExpPoly":
        """Build from a dense coefficient list ``[c0, c1, ...]`` (c_k multiplies r^k)."""
        return cls({k: c for k, c in enumerate(coeffs)}, beta)

    # -- inspection ---------------------------------------------------------

    def as_dict(self) -> dict[int, Fraction]:
        return {k: c for c, k in self.terms}

    def coeff(self, power: int) -> Fraction:
        return self.as_dict().get(power, Fraction(0))

    @property
    def degree(self) -> int:
        return self.terms[-1][1] if self.terms else -1

    @property
    def lowest_power(self) -> int:
        return self.terms[0][1] if self.terms else -1

    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, r):
        total = 0.0
        for c, k in self.terms:
            total = total + float(c) * r**k
        return total * np.exp(-float(self.beta) * r)

    # -- algebra ------------------------------------------------------------

    def _check_beta(self, other: "ExpPoly") -> None:
        if self.beta != other.beta and not (self.is_zero() or other.is_zero()):
            raise ValueError(f"cannot add ExpPolys with beta {self.beta} and {other.beta}")

    def __add__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        self._check_beta(other)
        beta = self.beta if not self.is_zero() else other.beta
        return ExpPoly(list(self.terms) + list(other.terms), beta)

    def __neg__(self):
        return ExpPoly([(-c, k) for c, k in self.terms], self.beta)

    def __sub__(self, other):
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ExpPoly):
            prod = _poly_mul(self.as_dict(), other.as_dict())
            return ExpPoly(prod, self.beta + other.beta)
        if isinstance(other, (int, Fraction)):
            return ExpPoly([(c * other, k) for c, k in self.terms], self.beta)
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, k: int) -> "ExpPoly":
        """Multiply by r**k; ``k`` may be negative as long as no power drops below 0."""
        if self.terms and self.lowest_power + k < 0:
            raise ValueError(f"r^{k} would produce a negative power (lowest is r^{self.lowest_power})")
        return ExpPoly([(c, p + k) for c, p in self.terms], self.beta)

    def derivative(self) -> "ExpPoly":
        out: dict[int, Fraction] = {}
        for c, k in self.terms:
            if k:
                out[k - 1] = out.get(k - 1, 0) + c * k
            out[k] = out.get(k, 0) - c * self.beta
        return ExpPoly(out, self.beta)

    def integrate(self) -> Fraction:
        """Exact integral over [0, inf): sum c_k k! / beta^(k+1)."""
        if self.is_zero():
            return Fraction(0)
        if self.beta <= 0:
            raise DivergentIntegralError(f"integral of r^k e^(-beta r) diverges for beta={self.beta}")
        return sum(
            (c * factorial(k) / self.beta ** (k + 1) for c, k in self.terms), Fraction(0)
        )

    def __repr__(self) -> str:
        body = " + ".join(f"({c})r^{k}" for c, k in self.terms) or "0"
        return f"ExpPoly[{body}; beta={self.beta}]"


# ---------------------------------------------------------------------------
# trigonometric polynomials in (sin, cos)
# ---------------------------------------------------------------------------


def _canonical(raw: Mapping[tuple[int, int], object]) -> dict[tuple[int, int], Fraction]:
    # expand sin^2 -> 1 - cos^2 first, then merge, then drop zeros
    out: dict[tuple[int, int], Fraction] = {}
    for (s, k), c in raw.items():
        c = to_rational(c)
        if c == 0:
            continue
        half, parity = divmod(s, 2)
        # sin^(2h) = (1 - cos^2)^h
        for j in range(half + 1):
            key = (parity, k + 2 * j)
            out[key] = out.get(key, Fraction(0)) + c * math.comb(half, j) * (-1) ** j
    return {key: c for key, c in sorted(out.items()) if c != 0}


@dataclass(frozen=True)
class TrigPoly:
    """Canonical ``sum c * sin^s(theta) * cos^k(theta)`` with ``s`` in {0, 1}."""

    terms: tuple[tuple[Fraction, int, int], ...]

    def __init__(self, terms: Iterable[tuple[object, int, int]] | Mapping[tuple[int, int], object] = ()):
        if isinstance(terms, Mapping):
            raw = dict(terms)
        else:
            raw = {}
            for c, s, k in terms:
                if s < 0 or k < 0:
                    raise ValueError("sin/cos powers must be nonnegative")
                raw[(s, k)] = raw.get((s, k), Fraction(0)) + to_rational(c)
        canon = _canonical(raw)
        object.__setattr__(self, "terms", tuple((c, s, k) for (s, k), c in canon.items()))

    @classmethod
    def from_sin_cos(cls, sin_power: int, cos_poly: Sequence[object]) -> "TrigPoly":
        """sin^p(theta) * sum_k cos_poly[k] cos^k(theta)."""
        return cls([(c, sin_power, k) for k, c in enumerate(cos_poly)])

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return {(s, k): c for c, s, k in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, theta):
        s, co = np.sin(theta), np.cos(theta)
        total = 0.0
        for c, sp, k in self.terms:
            total = total + float(c) * s**sp * co**k
        return total

    def __add__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        raw = self.as_dict()
        for key, c in other.as_dict().items():
            raw[key] = raw.get(key, Fraction(0)) + c
        return TrigPoly(raw)

    def __neg__(self):
        return TrigPoly([(-c, s, k) for c, s, k in self.terms])

    def __sub__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TrigPoly):
            raw: dict[tuple[int, int], Fraction] = {}
            for c1, s1, k1 in self.terms:
                for c2, s2, k2 in other.terms:
                    key = (s1 + s2, k1 + k2)
                    raw[key] = raw.get(key, Fraction(0)) + c1 * c2
            return TrigPoly(raw)
        if isinstance(other, (int, Fraction)):
            return TrigPoly([(c * other, s, k) for c, s, k in self.terms])
        return NotImplemented

    __rmul__ = __mul__

    def times_sin(self, power: int = 1) -> "TrigPoly":
        return TrigPoly([(c, s + power, k) for c, s, k in self.terms])

    def derivative(self) -> "TrigPoly":
        raw: dict[tuple[int, int], Fraction] = {}

        def put(s, k, c):
            raw[(s, k)] = raw.get((s, k), Fraction(0)) + c

        for c, s, k in self.terms:
            # d/dθ sin^s cos^k = s sin^(s-1) cos^(k+1) - k sin^(s+1) cos^(k-1)
            if s:
                put(s - 1, k + 1, c * s)
            if k:
                put(s + 1, k - 1, -c * k)
        return TrigPoly(raw)

    def integrate(self, with_sin_measure: bool = False) -> Fraction:
        """Exact integral over [0, pi], optionally against sin(theta) d theta.

        Every surviving term must carry an odd power of sin; the u = cos(theta)
        substitution then leaves a polynomial on [-1, 1].
        """
        f = self.times_sin() if with_sin_measure else self
        total = Fraction(0)
        for c, s, k in f.terms:
            if s != 1:
                raise UnsupportedIntegrandError(
                    f"term {c}*cos^{k} has an even power of sin; its integral carries pi"
                )
            if k % 2 == 0:
                total += c * Fraction(2, k + 1)
        return total

    def __repr__(self) -> str:
        body = " + ".join(f"({c})s^{s}c^{k}" for c, s, k in self.terms) or "0"
        return f"TrigPoly[{body}]"


# functional aliases mirroring the operation names


def integrate_radial(f: ExpPoly) -> Fraction:
    return f.integrate()


def integrate_polar(f: TrigPoly, with_sin_measure: bool = False) -> Fraction:
    return f.integrate(with_sin_measure)


def differentiate_radial(f: ExpPoly) -> ExpPoly:
    return f.derivative()


def differentiate_polar(f: TrigPoly) -> TrigPoly:
    return f.derivative()
