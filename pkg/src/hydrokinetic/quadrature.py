"""Floating-point Gauss quadrature used as an independent check on the exact engine.

Nodes and weights come from Newton iteration on the three-term recurrences
(no tables, no library root finders).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import UnsupportedIntegrandError
from .exact import ExpPoly, TrigPoly

__all__ = [
    "QuadratureRule",
    "InsufficientOrderError",
    "gauss_laguerre",
    "gauss_legendre",
    "quad_radial",
    "quad_polar",
    "cross_check_state",
]

_NEWTON_TOL = 1e-15
_MAX_ITER = 100


class InsufficientOrderError(ValueError):
    """Requested rule order cannot integrate the polynomial part exactly."""


@dataclass(frozen=True)
class QuadratureRule:
    kind: str
    nodes: tuple[float, ...]
    weights: tuple[float, ...]

    @property
    def order(self) -> int:
        return len(self.nodes)

    def __post_init__(self):
        if len(self.nodes) != len(self.weights):
            raise ValueError("nodes and weights differ in length")
        if any(w <= 0 for w in self.weights):
            raise ValueError(f"{self.kind} rule has a nonpositive weight")


@lru_cache(maxsize=None)
def gauss_laguerre(order: int) -> QuadratureRule:
    """Nodes/weights for int_0^inf f(x) e^{-x} dx.

    Initial guesses follow Stroud & Secrest; each root is then polished by
    Newton steps on L_order evaluated through its recurrence.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    n = order
    nodes: list[float] = []
    weights: list[float] = []
    z = 0.0
    for i in range(n):
        if i == 0:
            z = 3.0 / (1.0 + 2.4 * n)
        elif i == 1:
            z += 15.0 / (1.0 + 2.5 * n)
        else:
            ai = i - 1
            z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - nodes[i - 2])
        for _ in range(_MAX_ITER):
            p1, p2 = 1.0, 0.0
            for j in range(1, n + 1):
                p3, p2 = p2, p1
                p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j
            pp = n * (p1 - p2) / z
            dz = p1 / pp
            z -= dz
            if abs(dz) <= _NEWTON_TOL * max(1.0, abs(z)):
                break
        else:
            # last-ulp oscillation is fine; a real failure leaves dz large
            if abs(dz) > 1e-12 * max(1.0, abs(z)):
                raise RuntimeError(f"Laguerre root {i} of order {n} did not converge")
        # recompute at the converged root for the weight
        p1, p2 = 1.0, 0.0
        for j in range(1, n + 1):
            p3, p2 = p2, p1
            p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j
        pp = n * (p1 - p2) / z
        nodes.append(z)
        weights.append(-1.0 / (pp * n * p2))
    return QuadratureRule("gauss-laguerre", tuple(nodes), tuple(weights))


@lru_cache(maxsize=None)
def gauss_legendre(order: int) -> QuadratureRule:
    """Nodes/weights for int_{-1}^{1} f(u) du, ascending nodes."""
    if order < 1:
        raise ValueError("order must be >= 1")
    n = order
    nodes = [0.0] * n
    weights = [0.0] * n
    for i in range((n + 1) // 2):
        z = math.cos(math.pi * (i + 0.75) / (n + 0.5))
        for _ in range(_MAX_ITER):
            p1, p2 = 1.0, 0.0
            for j in range(1, n + 1):
                p3, p2 = p2, p1
                p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j
            pp = n * (z * p1 - p2) / (z * z - 1.0)
            dz = p1 / pp
            z -= dz
            if abs(dz) <= _NEWTON_TOL:
                break
        else:
            if abs(dz) > 1e-12:
                raise RuntimeError(f"Legendre root {i} of order {n} did not converge")
        p1, p2 = 1.0, 0.0
        for j in range(1, n + 1):
            p3, p2 = p2, p1
            p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j
        pp = n * (z * p1 - p2) / (z * z - 1.0)
        w = 2.0 / ((1.0 - z * z) * pp * pp)
        nodes[i], nodes[n - 1 - i] = -z, z
        weights[i] = weights[n - 1 - i] = w
    return QuadratureRule("gauss-legendre", tuple(nodes), tuple(weights))


def _dense(d: dict[int, Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (max(d) + 1)
    for k, c in d.items():
        out[k] = c
    return out


def _horner(coeffs: list[Fraction], x: Fraction) -> float:
    # exact evaluation at the (float) node: high-degree alternating
    # coefficients lose ~1e-7 relative when summed in floating point
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return float(acc)


def quad_radial(f: ExpPoly, order: int | None = None) -> float:
    """int_0^inf f(r) dr by Gauss-Laguerre after x = beta r."""
    if f.is_zero():
        return 0.0
    deg = f.degree
    needed = math.ceil((deg + 2) / 2)
    if order is None:
        order = max(2, 2 * deg)
    if order < needed:
        raise InsufficientOrderError(f"degree {deg} needs order >= {needed}, got {order}")
    rule = gauss_laguerre(order)
    coeffs = _dense(f.as_dict())
    vals = [_horner(coeffs, Fraction(x) / f.beta) for x in rule.nodes]
    return float(np.dot(rule.weights, vals)) / float(f.beta)


def quad_polar(f: TrigPoly, with_sin_measure: bool = False, order: int | None = None) -> float:
    """int_0^pi f(theta) [sin theta] d theta by Gauss-Legendre in u = cos theta."""
    g = f.times_sin() if with_sin_measure else f
    if g.is_zero():
        return 0.0
    if any(s != 1 for _, s, _ in g.terms):
        raise UnsupportedIntegrandError("Gauss-Legendre in cos(theta) needs an odd power of sin")
    deg = max(k for _, _, k in g.terms)
    needed = math.ceil((deg + 2) / 2)
    if order is None:
        order = max(2, 2 * deg)
    if order < needed:
        raise InsufficientOrderError(f"cos degree {deg} needs order >= {needed}, got {order}")
    rule = gauss_legendre(order)
    coeffs = _dense({k: c for c, _, k in g.terms})
    vals = [_horner(coeffs, Fraction(u)) for u in rule.nodes]
    return float(np.dot(rule.weights, vals))


def cross_check_state(state) -> float:
    """Worst relative deviation between quadrature and exact energy terms."""
    from . import energy

    rad = energy.radial_integrands(state)
    pol = energy.polar_integrands(state)
    exact = energy.decompose(state)

    ang_norm = quad_polar(pol["norm"])
    ri = -quad_radial(rad["ri"])
    numeric = {
        "potential": -2.0 * quad_radial(rad["potential"]) * ang_norm,
        "keR": -quad_radial(rad["intrinsic"]) * ang_norm,
        "keTheta": ri * quad_polar(pol["theta"]) if state.l else 0.0,
        "kePhi": ri * quad_polar(pol["phi"]) * -(state.m**2) if state.m else 0.0,
    }
    worst = 0.0
    for key, q in numeric.items():
        e = float(getattr(exact, key))
        dev = abs(q - e) / abs(e) if e else abs(q)
        worst = max(worst, dev)
    return worst
