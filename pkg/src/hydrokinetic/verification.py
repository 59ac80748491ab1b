"""Invariant suite behind ``hydrokinetic verify``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Iterator

from . import angular, energy, grid, quadrature
from .errors import ConsistencyError
from .wavefunctions import HydrogenState, build_state, verify_eigenvalue

__all__ = ["CheckResult", "FAULTS", "REFERENCE_TABLE", "run_verification", "iter_states"]

F = Fraction

# Reference energy table in units of E_n = E1/n^2: (KE_r, KE_theta, KE_phi, dynamic).
# None marks a cell whose printed value is garbled or contradicts its own row.
REFERENCE_TABLE: dict[tuple[int, int, int], tuple] = {
    (1, 0, 0): (F(1), F(0), F(0), F(0)),
    (2, 0, 0): (F(1), F(0), F(0), F(0)),
    (3, 0, 0): (F(1), F(0), F(0), F(0)),
    (2, 1, 0): (F(1, 3), F(2, 3), None, F(2, 3)),
    (2, 1, 1): (F(1, 3), None, F(1, 2), F(2, 3)),
    (3, 1, 0): (F(5, 9), F(4, 9), F(0), F(4, 9)),
    (3, 1, 1): (F(5, 9), None, F(3, 9), F(4, 9)),
    (3, 2, 0): (F(3, 15), F(12, 15), F(0), F(12, 15)),
    (3, 2, 1): (F(3, 15), F(7, 15), F(5, 15), F(12, 15)),
    (3, 2, 2): (F(3, 15), F(2, 15), F(10, 15), F(12, 15)),
    (7, 3, 0): (F(25, 49), F(24, 49), F(0), F(24, 49)),
    (7, 3, 1): (F(25, 49), F(17, 49), F(7, 49), F(24, 49)),
    (7, 3, 2): (F(25, 49), F(10, 49), F(14, 49), F(24, 49)),
    (7, 3, 3): (F(25, 49), F(3, 49), F(21, 49), F(24, 49)),
}

FAULTS = ("normalization",)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def iter_states(n_max: int, factory: Callable[[int, int, int], HydrogenState] = build_state) -> Iterator[HydrogenState]:
    for n in range(1, n_max + 1):
        for l in range(n):
            for m in range(-l, l + 1):
                yield factory(n, l, m)


def _faulty_factory(fault: str | None) -> Callable[[int, int, int], HydrogenState]:
    if fault is None:
        return build_state
    if fault == "normalization":

        def factory(n, l, m):
            st = build_state(n, l, m)
            return replace(st, radial=replace(st.radial, c2=2 * st.radial.c2))

        return factory
    raise ValueError(f"unknown fault {fault!r}; known: {FAULTS}")


def _guard(name: str, fn: Callable[[], str]) -> CheckResult:
    try:
        return CheckResult(name, True, fn())
    except (AssertionError, ConsistencyError) as exc:
        return CheckResult(name, False, str(exc) or exc.__class__.__name__)


def run_verification(n_max: int = 12, fault: str | None = None) -> list[CheckResult]:
    factory = _faulty_factory(fault)
    states = list(iter_states(n_max, factory))
    results: list[CheckResult] = []

    def normalization():
        for st in states:
            assert st.norm_integral() == 1, f"state {st.label}: integral |Psi|^2 = {st.norm_integral()}"
        return f"{len(states)} states integrate to exactly 1"

    def eigenvalue():
        for st in states:
            verify_eigenvalue(st)
        return f"(H - E) Psi == 0 symbolically, E = -1/n^2 for {len(states)} states"

    breakdowns: dict[str, energy.EnergyBreakdown] = {}

    def checksum():
        for st in states:
            eb = energy.decompose(st)
            breakdowns[st.label] = eb
            assert eb.totalKE == F(1, st.n**2), f"state {st.label}: KE = {eb.totalKE}"
        return "KE = 1/n^2 and E = -1/n^2 exactly"

    def virial():
        for st in states:
            eb = breakdowns.get(st.label) or energy.decompose(st)
            assert eb.potential == -2 * eb.totalKE, f"state {st.label}: V = {eb.potential}, KE = {eb.totalKE}"
        return "V = -2 KE exactly"

    def m_independence():
        for n in range(1, n_max + 1):
            for l in range(n):
                dyn = {energy.decompose(factory(n, l, m)).dynamic for m in range(-l, l + 1)}
                assert len(dyn) == 1, f"(n,l)=({n},{l}) dynamic energies {sorted(dyn)}"
        return "KE_theta + KE_phi depends on (n, l) only"

    def dynamic_identity():
        for st in states:
            eb = breakdowns.get(st.label) or energy.decompose(st)
            expected = st.l * (st.l + 1) * -energy.ri_term(st)
            assert eb.dynamic == expected, f"state {st.label}: {eb.dynamic} != l(l+1)|RI| = {expected}"
        return "KE_theta + KE_phi = l(l+1) <1/r^2>"

    def reference_table():
        for nlm, cells in REFERENCE_TABLE.items():
            for m in {nlm[2], -nlm[2]}:
                st = factory(nlm[0], nlm[1], m)
                eb = energy.decompose(st)
                n2 = st.n**2
                got = (eb.keR * n2, eb.keTheta * n2, eb.kePhi * n2, eb.dynamic * n2)
                for name, want, have in zip(("KE_r", "KE_theta", "KE_phi", "dynamic"), cells, got):
                    if want is not None:
                        assert want == have, f"state {st.label} {name}: {have} E_n != reference {want} E_n"
        return "14 rows match every unambiguous reference cell"

    def oracle():
        worst = 0.0
        for nlm in REFERENCE_TABLE:
            worst = max(worst, quadrature.cross_check_state(factory(*nlm)))
        assert worst < 1e-10, f"worst relative deviation {worst:.3e}"
        return f"Gauss quadrature vs exact: worst relative deviation {worst:.2e}"

    def clebsch_gordan():
        count = 0
        for l in range(7):
            for j2 in (2 * l - 1, 2 * l + 1):
                if j2 < 1:
                    continue
                for jz2 in range(-j2, j2 + 1, 2):
                    cs = angular.couple_spin(l, F(j2, 2), F(jz2, 2))
                    assert cs.weight_sum() == 1
                    for t in cs.terms:
                        assert t.ml + t.sz == cs.jz
                    count += 1
        return f"{count} |j, jz> states, weights sum to 1 exactly"

    def radial_current():
        rng = random.Random(1234)
        worst = 0.0
        for st in iter_states(min(n_max, 7), factory):
            for _ in range(100):
                r = rng.uniform(0.05, 3.0 * st.n**2)
                th = rng.uniform(0.0, math.pi)
                ph = rng.uniform(0.0, 2 * math.pi)
                assert grid.radial_current(st, r, th) == 0.0
                worst = max(worst, abs(grid.radial_current_numeric(st, r, th, ph)))
        assert worst < 1e-14, f"finite-difference |j_r| up to {worst:.2e}"
        return f"j_r = 0 symbolically; finite differences <= {worst:.1e}"

    def spinning_field():
        rep = angular.spin2p_report()
        assert rep.agreement, "explicit and operator dynamic energies disagree"
        rel = abs(rep.period - rep.period_from_moment) / rep.period
        assert rel < 1e-12, f"period mismatch {rel:.2e}"
        return f"T = {rep.period:.4e} s, explicit = operator = {rep.operator_energy_E1} E1"

    for name, fn in [
        ("normalization", normalization),
        ("eigenvalue", eigenvalue),
        ("checksum", checksum),
        ("virial", virial),
        ("m-independence", m_independence),
        ("dynamic-identity", dynamic_identity),
        ("reference-table", reference_table),
        ("oracle", oracle),
        ("clebsch-gordan", clebsch_gordan),
        ("radial-current", radial_current),
        ("spinning-field", spinning_field),
    ]:
        results.append(_guard(name, fn))
    return results
