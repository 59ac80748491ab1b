"""Floating-point sampling of |Psi|^2: sections, velocity arrows, radial current.

Two azimuthal bases are supported:

``complex``  e^{i m phi}/sqrt(2 pi); the density does not depend on phi.
``real``     cos(m phi)/sqrt(pi) for m > 0, sin(|m| phi)/sqrt(pi) for m < 0;
             the standing-wave form whose sections show azimuthal lobes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

import numpy as np

from .errors import DomainError
from .wavefunctions import HydrogenState

__all__ = [
    "GridSpec",
    "Raster",
    "LobeSummary",
    "psi",
    "density",
    "default_extent",
    "radial_tail_mass",
    "section",
    "count_local_maxima",
    "lobe_summary",
    "velocity_field",
    "radial_current",
    "radial_current_numeric",
    "integrate_density_3d",
]

Basis = Literal["complex", "real"]
_AXES = ("x", "y", "z")


@dataclass(frozen=True)
class GridSpec:
    """A square section perpendicular to ``axis`` at ``offset`` (units of a)."""

    axis: str = "z"
    offset: float = 0.0
    extent: float = 10.0
    resolution: int = 256

    def __post_init__(self):
        if self.axis not in _AXES:
            raise DomainError(f"plane axis must be one of x, y, z (got {self.axis!r})")
        if not self.extent > 0:
            raise DomainError(f"extent must be > 0 (got {self.extent})")
        if self.resolution < 16 or self.resolution % 2:
            raise DomainError(f"resolution must be an even integer >= 16 (got {self.resolution})")

    @classmethod
    def parse_plane(cls, plane: str, **kw) -> "GridSpec":
        """``"z=0"`` -> GridSpec(axis="z", offset=0.0, ...)."""
        try:
            axis, value = plane.split("=")
            return cls(axis=axis.strip(), offset=float(value), **kw)
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"plane must look like 'z=0' (got {plane!r})") from None

    @property
    def pixel(self) -> float:
        return 2.0 * self.extent / self.resolution

    def centers(self) -> np.ndarray:
        return -self.extent + (np.arange(self.resolution) + 0.5) * self.pixel

    def in_plane_axes(self) -> tuple[str, str]:
        return {"z": ("x", "y"), "x": ("y", "z"), "y": ("x", "z")}[self.axis]

    def to_xyz(self, u, v):
        """Map in-plane coordinates (u, v) to Cartesian (x, y, z)."""
        w = np.full(np.broadcast(u, v).shape, self.offset, dtype=float)
        if self.axis == "z":
            return u, v, w
        if self.axis == "x":
            return w, u, v
        return u, w, v

    def mesh(self):
        c = self.centers()
        u, v = np.meshgrid(c, c)  # rows follow v, columns follow u
        return self.to_xyz(u, v)


@dataclass
class Raster:
    values: np.ndarray
    meta: dict = field(default_factory=dict)

    def normalized(self) -> np.ndarray:
        peak = self.values.max()
        return self.values / peak if peak > 0 else self.values.copy()

    def to_csv(self, path: str | Path) -> None:
        header = " ".join(f"{k}={v}" for k, v in self.meta.items())
        np.savetxt(path, self.values, delimiter=",", fmt="%.17g", header=header)

    def to_pgm(self, path: str | Path) -> None:
        """8-bit binary PGM, linear max-normalization, +v axis pointing up."""
        img = np.round(self.normalized()[::-1] * 255).astype(np.uint8)
        h, w = img.shape
        with open(path, "wb") as fh:
            fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
            fh.write(img.tobytes())


# ---------------------------------------------------------------------------
# point evaluation
# ---------------------------------------------------------------------------


def _cartesian_to_spherical(x, y, z):
    r = np.sqrt(x * x + y * y + z * z)
    with np.errstate(invalid="ignore", divide="ignore"):
        theta = np.where(r > 0, np.arccos(np.clip(z / np.where(r > 0, r, 1.0), -1.0, 1.0)), 0.0)
    phi = np.arctan2(y, x)
    return r, theta, phi


def _azimuthal(m: int, phi, basis: Basis):
    if basis == "complex":
        return np.exp(1j * m * np.asarray(phi, dtype=float)) / math.sqrt(2 * math.pi)
    if basis == "real":
        if m == 0:
            return np.ones_like(np.asarray(phi, dtype=float)) / math.sqrt(2 * math.pi)
        trig = np.cos if m > 0 else np.sin
        return trig(abs(m) * np.asarray(phi, dtype=float)) / math.sqrt(math.pi)
    raise DomainError(f"basis must be 'complex' or 'real' (got {basis!r})")


def psi(state: HydrogenState, r, theta, phi, basis: Basis = "complex"):
    amp = math.sqrt(state.radial.c2) * math.sqrt(state.polar.n2)
    return amp * state.radial(np.asarray(r, dtype=float)) * state.polar(theta) * _azimuthal(
        state.m, phi, basis
    )


def density(state: HydrogenState, r, theta, phi=0.0, basis: Basis = "complex"):
    """|Psi|^2 in units of a^-3."""
    if np.any(np.asarray(r) < 0):
        raise DomainError("r must be >= 0")
    if basis == "complex":
        # |e^{im phi}|^2 = 1 exactly: skip the phase entirely
        R = state.radial(np.asarray(r, dtype=float))
        T = state.polar(theta)
        out = float(state.radial.c2) * R * R * float(state.polar.n2) * T * T / (2 * math.pi)
        out = np.broadcast_to(out, np.broadcast(r, theta, phi).shape).copy()
    else:
        out = np.abs(psi(state, r, theta, phi, basis)) ** 2
    return float(out) if out.ndim == 0 else out


def radial_tail_mass(state: HydrogenState, radius: float) -> float:
    """Probability outside the sphere r = radius.

    Uses int_R^inf r^k e^{-b r} dr = k!/b^{k+1} e^{-bR} sum_{j<=k} (bR)^j/j!.
    """
    R = state.radial.exppoly()
    f = (R * R).shift(2)
    b = float(f.beta)
    x = b * radius
    total = 0.0
    for c, k in f.terms:
        partial = sum(math.exp(j * math.log(x) - math.lgamma(j + 1) - x) for j in range(k + 1)) if x > 0 else 1.0
        total += float(c) * math.factorial(k) / b ** (k + 1) * partial
    return float(state.radial.c2) * total


def default_extent(state: HydrogenState, tail: float = 1e-6) -> float:
    """Smallest multiple of n/2 (in a) whose enclosing sphere leaves < ``tail`` mass outside."""
    step = state.n / 2
    radius = step
    while radial_tail_mass(state, radius) >= tail:
        radius += step
    return radius


# ---------------------------------------------------------------------------
# sections and lobe structure
# ---------------------------------------------------------------------------


def section(state: HydrogenState, spec: GridSpec, basis: Basis = "real") -> Raster:
    """Sample |Psi|^2 at pixel centers of the plane described by ``spec``.

    ``values[i, j]`` is the pixel at v = centers[i], u = centers[j] where
    (u, v) are the in-plane axes (x, y for a z-plane).
    """
    x, y, z = spec.mesh()
    r, theta, phi = _cartesian_to_spherical(x, y, z)
    vals = np.asarray(density(state, r, theta, phi, basis), dtype=float)
    vals = np.where(vals < 0, 0.0, vals)
    meta = {
        "state": state.label,
        "plane": f"{spec.axis}={spec.offset:g}",
        "extent": f"{spec.extent:g}",
        "resolution": spec.resolution,
        "basis": basis,
        "units": "a^-3",
    }
    return Raster(vals, meta)


def count_local_maxima(
    samples, circular: bool = False, plateau_tol: float = 1e-12, truncated_end: bool = False
) -> list[int]:
    """Indices of strict local maxima of a 1-D profile.

    Runs of samples equal within ``plateau_tol`` count as one candidate,
    reported at the run's middle. On an open profile an endpoint run counts
    when it exceeds its single neighbour, except the last one when
    ``truncated_end`` says the profile was cut off there.
    """
    y = np.asarray(samples, dtype=float)
    n = len(y)
    if n == 0:
        return []
    # collapse plateaus into runs (start, stop, value)
    runs: list[list] = []
    for i, v in enumerate(y):
        if runs and abs(v - runs[-1][2]) <= plateau_tol:
            runs[-1][1] = i
        else:
            runs.append([i, i, v])
    if circular and len(runs) > 1 and abs(runs[0][2] - runs[-1][2]) <= plateau_tol:
        first = runs.pop(0)
        runs[-1][1] = first[1] + n
    if len(runs) == 1:
        return []
    out = []
    k = len(runs)
    for idx, (start, stop, v) in enumerate(runs):
        if circular:
            left, right = runs[idx - 1][2], runs[(idx + 1) % k][2]
        else:
            left = runs[idx - 1][2] if idx > 0 else -math.inf
            if idx < k - 1:
                right = runs[idx + 1][2]
            else:
                right = math.inf if truncated_end else -math.inf
        if v > left and v > right:
            out.append(((start + stop) // 2) % n)
    return sorted(out)


@dataclass(frozen=True)
class LobeSummary:
    azimuthal: int
    radial: int
    r_peak: float
    phi_peak: float
    central: bool

    def describe(self) -> str:
        if self.central:
            if self.radial == 1:
                return "1 central maximum"
            return f"central maximum + {self.radial - 1} radial shell maxima"
        return f"{self.azimuthal} azimuthal × {self.radial} radial maxima"


def lobe_summary(
    state: HydrogenState,
    raster: Raster,
    spec: GridSpec,
    samples: int = 4096,
    plateau_tol: float = 1e-12,
) -> LobeSummary:
    """Count density maxima along the circle and the ray through the raster's brightest pixel.

    The raster only fixes where to look; the profiles themselves are sampled
    from the density (same basis as the raster) so interpolation artefacts
    cannot add or hide maxima. The ray runs from the origin to the edge of
    the section.
    """
    basis = raster.meta.get("basis", "real")
    i, j = np.unravel_index(np.argmax(raster.values), raster.values.shape)
    c = spec.centers()
    u0, v0 = c[j], c[i]
    r_peak = math.hypot(u0, v0)
    phi_peak = math.atan2(v0, u0)
    central = r_peak <= spec.pixel

    def profile(u, v):
        r, theta, phi = _cartesian_to_spherical(*spec.to_xyz(u, v))
        vals = np.asarray(density(state, r, theta, phi, basis), dtype=float)
        peak = vals.max()
        return vals / peak if peak > 0 else vals

    if central:
        phi_peak = 0.0
    reach = spec.extent / max(abs(math.cos(phi_peak)), abs(math.sin(phi_peak)))
    t = np.linspace(0.0, reach, samples)
    ray = profile(t * math.cos(phi_peak), t * math.sin(phi_peak))
    rad = len(count_local_maxima(ray, plateau_tol=plateau_tol, truncated_end=True))
    if central:
        return LobeSummary(0, rad, r_peak, phi_peak, central=True)
    ang = phi_peak + 2 * math.pi * np.arange(samples) / samples
    ring = profile(r_peak * np.cos(ang), r_peak * np.sin(ang))
    az = len(count_local_maxima(ring, circular=True, plateau_tol=plateau_tol))
    return LobeSummary(az, rad, r_peak, phi_peak, central=False)


# ---------------------------------------------------------------------------
# velocity arrows and currents
# ---------------------------------------------------------------------------


def velocity_field(
    state: HydrogenState,
    spec: GridSpec,
    T: float,
    bohr_radius: float = 5.29177210903e-11,
    min_density: float = 0.0,
    stride: int = 1,
) -> list[dict]:
    """Rigid-rotation arrows v = 2 pi (r sin theta) a / T about the z axis.

    Only defined for n = 2, l = 1. Each arrow carries its Cartesian position
    (units of a), speed (m/s), the azimuthal unit vector and the local
    density; arrows below ``min_density`` (fraction of the peak) are dropped.
    """
    if (state.n, state.l) != (2, 1):
        raise DomainError(f"velocity field is defined for 2p states only (got {state.label})")
    if T <= 0:
        raise DomainError("period must be positive")
    x, y, z = (a[::stride, ::stride] for a in spec.mesh())
    r, theta, phi = _cartesian_to_spherical(x, y, z)
    rho = np.asarray(density(state, r, theta, phi), dtype=float)
    peak = rho.max() if rho.size else 0.0
    cyl = np.hypot(x, y)
    speed = 2.0 * math.pi * cyl * bohr_radius / T
    arrows = []
    for idx in np.ndindex(x.shape):
        if peak > 0 and rho[idx] < min_density * peak:
            continue
        if cyl[idx] > 0:
            d = (-y[idx] / cyl[idx], x[idx] / cyl[idx], 0.0)
        else:
            d = (0.0, 0.0, 0.0)
        arrows.append(
            {
                "x": float(x[idx]),
                "y": float(y[idx]),
                "z": float(z[idx]),
                "speed": float(speed[idx]),
                "direction": [float(d[0]), float(d[1]), float(d[2])],
                "density": float(rho[idx]),
            }
        )
    return arrows


def radial_current(state: HydrogenState, r: float, theta: float) -> float:
    """j_r = (i hbar/2m)(Psi dPsi*/dr - Psi* dPsi/dr), in units hbar/(m a^4).

    The e^{i m phi} phase is r-independent and cancels between the two
    products, leaving the radial factor R R' - R' R, which is formed and
    evaluated symbolically.
    """
    if r <= 0:
        raise DomainError("r must be > 0")
    R = state.radial.exppoly()
    dR = R.derivative()
    antisym = R * dR - dR * R
    if antisym.is_zero():
        return 0.0
    angular = float(state.polar.n2) * float(state.polar(theta)) ** 2 / (2 * math.pi)
    return 0.5 * float(state.radial.c2) * angular * float(antisym(r))


def radial_current_numeric(
    state: HydrogenState, r: float, theta: float, phi: float, h: float = 1e-4
) -> float:
    """Finite-difference j_r on the complex Psi, phase included (hbar = m = 1)."""
    p = psi(state, r, theta, phi)
    dp = (psi(state, r + h, theta, phi) - psi(state, r - h, theta, phi)) / (2 * h)
    # (i/2)(p conj(dp) - conj(p) dp) = Im(conj(p) dp)
    return float(np.imag(np.conj(p) * dp))


def integrate_density_3d(
    state: HydrogenState, extent: float, resolution: int, basis: Basis = "complex"
) -> float:
    """Midpoint-rule integral of |Psi|^2 over the cube [-extent, extent]^3."""
    if resolution % 2:
        raise DomainError("resolution must be even")
    h = 2.0 * extent / resolution
    c = -extent + (np.arange(resolution) + 0.5) * h
    total = 0.0
    xx, yy = np.meshgrid(c, c, indexing="ij")
    for zc in c:  # slab by slab to bound memory
        r, theta, phi = _cartesian_to_spherical(xx, yy, np.full_like(xx, zc))
        total += float(np.sum(density(state, r, theta, phi, basis)))
    return total * h**3


def arrows_to_json(arrows: list[dict], meta: dict | None = None) -> str:
    return json.dumps({"meta": meta or {}, "arrows": arrows}, indent=1, sort_keys=True)
