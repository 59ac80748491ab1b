"""Command-line front end.

Exit codes: 0 ok, 1 invariant failure, 2 bad input, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from importlib.resources import files
from pathlib import Path

from . import angular, energy, grid
from .errors import ConsistencyError, DomainError
from .verification import FAULTS, run_verification
from .wavefunctions import build_state, check_quantum_numbers, expectation_r_power

EXIT_OK, EXIT_INVARIANT, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3
N_CEILING = 30

COLUMNS = ("keR", "keTheta", "kePhi", "dynamic", "totalKE", "potential", "total")
HEADINGS = ("KE_r", "KE_theta", "KE_phi", "dynamic", "KE", "V", "total")


class _IOFailure(Exception):
    pass


def load_schema(name: str) -> dict:
    """One of the checked-in JSON schemas: state, table2, spin2p, expect, verify, arrows."""
    return json.loads(files("hydrokinetic").joinpath("schemas", f"{name}.schema.json").read_text())


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _align(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _state_numbers(n: int, l: int, m: int):
    if n > N_CEILING:
        raise DomainError(f"n must be <= {N_CEILING} (got n={n})")
    check_quantum_numbers(n, l, m)
    return build_state(n, l, m)


# -- renderers ---------------------------------------------------------------


def render_state(st, fmt: str) -> str:
    eb = energy.decompose(st)
    f = eb.fields()
    if fmt == "json":
        doc = {"n": st.n, "l": st.l, "m": st.m, **eb.to_dict(), "wavefunction": st.to_dict()}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        return _csv(["n", "l", "m", *COLUMNS], [[st.n, st.l, st.m, *(_q(f[k]) for k in COLUMNS)]])
    rows = [["component", "exact (E1)", "decimal (E1)", "eV"]]
    for key, head in zip(COLUMNS, HEADINGS):
        rows.append([head, str(f[key]), f"{float(f[key]):.12g}", f"{float(f[key]) * energy.E1_EV:.6f}"])
    return f"state n={st.n} l={st.l} m={st.m}  (eV uses E1 = {energy.E1_EV} eV, display only)\n" + _align(rows)


def table2_records() -> list[dict]:
    out = []
    for label, nlm in energy.TABLE2_STATES:
        eb = energy.decompose(build_state(*nlm))
        rec = {"label": label, "n": nlm[0], "l": nlm[1], "m": nlm[2]}
        rec.update({k: _q(v) for k, v in eb.fields().items() if k in COLUMNS})
        out.append(rec)
    return out


def render_table2(fmt: str) -> str:
    recs = table2_records()
    if fmt == "json":
        return json.dumps({"units": "E1", "rows": recs}, indent=2) + "\n"
    if fmt == "csv":
        keys = ["label", "n", "l", "m", *COLUMNS]
        return _csv(keys, [[r[k] for k in keys] for r in recs])
    rows = [["state", *HEADINGS]]
    for r in recs:
        en = Fraction(r["n"] ** 2)
        rows.append([r["label"], *(str(Fraction(r[k]) * en) for k in COLUMNS)])
    return "energies in units of E_n = E1/n^2\n" + _align(rows)


def render_spin2p(c: angular.PhysicalConstants, fmt: str) -> str:
    d = angular.spin2p_report(c).to_dict()
    if fmt == "json":
        return json.dumps(d, indent=2) + "\n"
    if fmt == "csv":
        return _csv(["quantity", "value"], [[k, v] for k, v in d.items()])
    fmt_val = lambda v: f"{v:.6g}" if isinstance(v, float) else str(v).lower() if isinstance(v, bool) else str(v)
    return _align([["quantity", "value"], *([k, fmt_val(v)] for k, v in d.items())])


def render_expect(st, k: int, fmt: str) -> str:
    val = expectation_r_power(st, k)
    if fmt == "json":
        return json.dumps({"n": st.n, "l": st.l, "m": st.m, "k": k, "value": _q(val), "float": float(val)}, indent=2) + "\n"
    if fmt == "csv":
        return _csv(["n", "l", "m", "k", "value", "float"], [[st.n, st.l, st.m, k, _q(val), repr(float(val))]])
    return f"<r^{k}> for ({st.n},{st.l},{st.m}) = {_q(val)} a^{k} = {float(val):.12g} a^{k}\n"


# -- commands ----------------------------------------------------------------


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {out}: {exc.strerror or exc}") from exc


def _constants(args) -> angular.PhysicalConstants:
    if args.constants is None:
        return angular.CODATA2018
    try:
        return angular.PhysicalConstants.from_json(args.constants)
    except OSError as exc:
        raise _IOFailure(f"cannot read {args.constants}: {exc.strerror or exc}") from exc
    except (ValueError, TypeError) as exc:
        raise DomainError(f"bad constants file {args.constants}: {exc}") from exc


def cmd_state(args) -> int:
    _emit(render_state(_state_numbers(args.n, args.l, args.m), args.format), args.out)
    return EXIT_OK


def cmd_table2(args) -> int:
    _emit(render_table2(args.format), args.out)
    return EXIT_OK


def cmd_spin2p(args) -> int:
    _emit(render_spin2p(_constants(args), args.format), args.out)
    return EXIT_OK


def cmd_expect(args) -> int:
    _emit(render_expect(_state_numbers(args.n, args.l, args.m), args.k, args.format), args.out)
    return EXIT_OK


def cmd_section(args) -> int:
    st = _state_numbers(args.n, args.l, args.m)
    extent = args.extent if args.extent is not None else grid.default_extent(st)
    spec = grid.GridSpec.parse_plane(args.plane, extent=extent, resolution=args.resolution)
    raster = grid.section(st, spec, basis=args.basis)
    summary = grid.lobe_summary(st, raster, spec)
    fmt = args.format
    if args.out is not None:
        if fmt not in ("csv", "pgm"):
            fmt = "pgm" if args.out.lower().endswith(".pgm") else "csv"
        try:
            raster.to_pgm(args.out) if fmt == "pgm" else raster.to_csv(args.out)
        except OSError as exc:
            raise _IOFailure(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    if args.arrows is not None:
        if args.arrow_stride < 1:
            raise DomainError(f"arrow stride must be >= 1 (got {args.arrow_stride})")
        c = _constants(args)
        arrows = grid.velocity_field(st, spec, angular.spinning_period_2p(c), c.bohr_radius, stride=args.arrow_stride)
        _emit(grid.arrows_to_json(arrows, raster.meta), args.arrows)
    line = f"({st.n},{st.l},{st.m}) {spec.axis}={spec.offset:g} extent={extent:g} res={spec.resolution}: {summary.describe()}"
    if args.format == "json":
        sys.stdout.write(
            json.dumps(
                {
                    **raster.meta,
                    "summary": summary.describe(),
                    "azimuthal_maxima": summary.azimuthal,
                    "radial_maxima": summary.radial,
                    "r_peak": summary.r_peak,
                },
                indent=2,
            )
            + "\n"
        )
    else:
        sys.stdout.write(line + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_verification(n_max=args.n_max, fault=args.inject_fault)
    failed = [r.name for r in results if not r.passed]
    if args.format == "json":
        text = json.dumps(
            {"passed": not failed, "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]},
            indent=2,
        ) + "\n"
    elif args.format == "csv":
        text = _csv(["name", "passed", "detail"], [[r.name, r.passed, r.detail] for r in results])
    else:
        text = "".join(r.line() + "\n" for r in results)
        text += f"{len(results) - len(failed)}/{len(results)} invariant families passed\n"
        if failed:
            text += "FAILED: " + ", ".join(failed) + "\n"
    _emit(text, args.out)
    if failed:
        sys.stderr.write("invariant failure: " + ", ".join(failed) + "\n")
        return EXIT_INVARIANT
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", metavar="PATH", default=None, help="write output here instead of stdout")
    common.add_argument("--constants", metavar="PATH", default=None, help="JSON override of physical constants")

    p = argparse.ArgumentParser(prog="hydrokinetic", description="Exact hydrogen energy decomposition and field analysis.")
    sub = p.add_subparsers(dest="command", required=True)

    def nlm(sp):
        sp.add_argument("n", type=int)
        sp.add_argument("l", type=int)
        sp.add_argument("m", type=int)

    sp = sub.add_parser("state", parents=[common], help="energy breakdown of one state")
    nlm(sp)
    sp.set_defaults(func=cmd_state)

    sp = sub.add_parser("table2", parents=[common], help="energy breakdown of the 14 tabulated states")
    sp.set_defaults(func=cmd_table2)

    sp = sub.add_parser("spin2p", parents=[common], help="spinning-field analysis of 2p")
    sp.set_defaults(func=cmd_spin2p)

    sp = sub.add_parser("expect", parents=[common], help="exact <r^k>")
    nlm(sp)
    sp.add_argument("k", type=int)
    sp.set_defaults(func=cmd_expect)

    sec_common = argparse.ArgumentParser(add_help=False)
    sec_common.add_argument("--format", choices=("text", "json", "csv", "pgm"), default="csv",
                            help="raster file format (csv or pgm); json prints the summary as JSON")
    sec_common.add_argument("--out", metavar="PATH", default=None, help="raster output path")
    sec_common.add_argument("--constants", metavar="PATH", default=None)
    sp = sub.add_parser("section", parents=[sec_common], help="density raster on a plane")
    nlm(sp)
    sp.add_argument("--plane", default="z=0", help="axis=offset, e.g. z=0 or x=1.5")
    sp.add_argument("--extent", type=float, default=None, help="half-width in a (default: enclose all but 1e-6 of the radial mass)")
    sp.add_argument("--resolution", type=int, default=256)
    sp.add_argument("--basis", choices=("real", "complex"), default="real")
    sp.add_argument("--arrows", metavar="PATH", default=None, help="also write 2p velocity arrows as JSON")
    sp.add_argument("--arrow-stride", type=int, default=16)
    sp.set_defaults(func=cmd_section)

    sp = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    sp.add_argument("--n-max", type=int, default=12)
    sp.add_argument("--inject-fault", choices=FAULTS, default=None, help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ConsistencyError as exc:
        sys.stderr.write(f"invariant failure: {exc}\n")
        return EXIT_INVARIANT
    except _IOFailure as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
