"""Command-line front end: entropy scans, Husimi grids, state dumps, and the
verification suite, with deterministic CSV/JSON output and optional figures.

Exit codes: 0 success, 1 verification failure, 2 configuration error,
3 numerical/truncation error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .analytic import entropy
from .errors import (
    DegenerateStateError,
    DomainError,
    NumericalConsistencyError,
    OverflowDomainError,
    TruncationError,
    UnsupportedCombinationError,
)
from .fock import build_paecs_numeric, state_dump
from .husimi import PhaseSpaceSlice, q_grid, qgrid_csv_lines, qgrid_json_dict
from .params import Family, PaecsSpec
from .verify import run_all

DEGENERATE_MARKER = "degenerate"

SCAN_COLUMNS = ("alpha", "m", "n", "lambda_plus", "lambda_minus", "entropy_bits")
VS_M_COLUMNS = ("m", "n", "entropy_bits")

_CONFIG_ERRORS = (DomainError, DegenerateStateError, UnsupportedCombinationError)
_NUMERIC_ERRORS = (TruncationError, NumericalConsistencyError, OverflowDomainError)


def _fmt(value) -> str:
    """Shortest decimal form that round-trips (at most 17 significant digits)."""
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, complex):
        if value.imag == 0.0:
            return repr(float(value.real))
        return repr(value).strip("()")
    return repr(float(value))


def _json_value(value):
    if isinstance(value, complex):
        if value.imag == 0.0:
            return float(value.real)
        return _fmt(value)
    return value


def parse_family(text: str) -> Family:
    try:
        return Family.from_string(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def parse_alpha_scalar(text: str) -> complex:
    try:
        return complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}") from exc


def parse_alpha_list(text: str) -> list[complex]:
    """Either a fixed alpha or a lo:hi:steps grid specification."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(
                f"alpha range must be lo:hi:steps, got {text!r}"
            )
        try:
            lo, hi = float(parts[0]), float(parts[1])
            steps = int(parts[2])
        except ValueError as exc:
            raise argparse.ArgumentTypeError(
                f"alpha range must be lo:hi:steps, got {text!r}"
            ) from exc
        if steps < 2:
            raise argparse.ArgumentTypeError("alpha range needs steps >= 2")
        return [complex(float(v)) for v in np.linspace(lo, hi, steps)]
    return [parse_alpha_scalar(text)]


def parse_mn(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected m,n pair, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected m,n pair, got {text!r}") from exc


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from exc
    if not values:
        raise argparse.ArgumentTypeError("list must be nonempty")
    return values


def parse_span(text: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from exc


def parse_axes(text: str) -> tuple[str, str]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected axis1,axis2, got {text!r}")
    return parts[0], parts[1]


def parse_fixed(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two floats, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected two floats, got {text!r}") from exc


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _emit_rows(args, columns, rows) -> None:
    if args.format == "json":
        payload = {
            "columns": list(columns),
            "rows": [
                {col: _json_value(v) for col, v in zip(columns, row)}
                for row in rows
            ],
        }
        _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [",".join(columns)]
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        _write_text(args.out, "\n".join(lines) + "\n")


def run_entropy_scan(args) -> int:
    rows = []
    for alpha in args.alpha:
        for (m, n) in args.mn:
            try:
                spec = PaecsSpec(args.family, alpha, m, n)
            except DegenerateStateError:
                rows.append(
                    (alpha, m, n, DEGENERATE_MARKER, DEGENERATE_MARKER,
                     DEGENERATE_MARKER)
                )
                continue
            res = entropy(spec)
            rows.append((alpha, m, n, res.lambda_plus, res.lambda_minus, res.bits))
    _emit_rows(args, SCAN_COLUMNS, rows)
    if args.fig:
        from . import plotting

        plotting.save_entropy_curves(
            rows, args.fig, title=f"{args.family.value}: entanglement vs amplitude"
        )
    return 0


def run_entropy_vs_m(args) -> int:
    rows = []
    for n in args.n:
        for m in range(args.m_max + 1):
            try:
                spec = PaecsSpec(args.family, args.alpha, m, n)
            except DegenerateStateError:
                rows.append((m, n, DEGENERATE_MARKER))
                continue
            rows.append((m, n, entropy(spec).bits))
    _emit_rows(args, VS_M_COLUMNS, rows)
    if args.fig:
        from . import plotting

        plotting.save_entropy_vs_m(
            rows,
            args.fig,
            title=f"{args.family.value}: entanglement vs m at "
            f"|alpha|={abs(args.alpha):g}",
        )
    return 0


def run_qfunc(args) -> int:
    if args.alpha is not None and args.alpha2 is not None:
        raise DomainError("pass either --alpha or --alpha2, not both")
    if args.alpha is not None:
        alpha = args.alpha
    else:
        alpha2 = 0.05 if args.alpha2 is None else args.alpha2
        if alpha2 < 0:
            raise DomainError("--alpha2 is |alpha|^2 and must be >= 0")
        alpha = complex(alpha2 ** 0.5)
    m, n = args.mn
    spec = PaecsSpec(args.family, alpha, m, n)
    slc = PhaseSpaceSlice(
        axis_1=args.axes[0],
        axis_2=args.axes[1],
        fixed_values=args.fixed,
        range=args.range,
        points=args.points,
    )
    grid = q_grid(spec, slc)
    if args.format == "json":
        _write_text(args.out, json.dumps(qgrid_json_dict(grid), indent=2) + "\n")
    else:
        _write_text(args.out, "\n".join(qgrid_csv_lines(grid)) + "\n")
    if args.fig:
        from . import plotting

        plotting.save_q_heatmap(
            grid,
            args.fig,
            title=f"{spec.family.value} (m,n)=({m},{n}), "
            f"|alpha|^2={abs(alpha) ** 2:g}",
        )
    return 0


def run_state(args) -> int:
    m, n = args.mn
    spec = PaecsSpec(args.family, args.alpha, m, n)
    state = build_paecs_numeric(spec)
    _write_text(args.out, json.dumps(state_dump(spec, state), indent=2) + "\n")
    return 0


def run_verify(args) -> int:
    report = run_all(perturb=args.perturb, quick=args.quick)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        line = (
            f"[{status}] {check.name}: max_abs_error={check.max_abs_error:.3e} "
            f"tolerance={check.tolerance:.1e}"
        )
        if check.notes:
            line += f" ({check.notes})"
        print(line)
    print(f"overall: {'PASS' if report.overall_pass else 'FAIL'}")
    if args.out:
        _write_text(args.out, json.dumps(report.to_dict(), indent=2) + "\n")
    return 0 if report.overall_pass else 1


def _add_output_options(sub, fig_help: str) -> None:
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    sub.add_argument("--fig", default=None, help=fig_help)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paecs",
        description=(
            "Entanglement and phase-space scans for photon-added entangled "
            "coherent states."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    scan = subs.add_parser(
        "entropy-scan", help="entanglement against alpha for (m, n) pairs"
    )
    scan.add_argument("--family", type=parse_family, required=True)
    scan.add_argument(
        "--alpha",
        type=parse_alpha_list,
        default=parse_alpha_list("0:3:121"),
        help="fixed value or lo:hi:steps grid (default 0:3:121)",
    )
    scan.add_argument(
        "--mn",
        type=parse_mn,
        action="append",
        required=True,
        help="m,n pair; repeatable",
    )
    _add_output_options(scan, "render the curves to this image file")
    scan.set_defaults(handler=run_entropy_scan)

    vsm = subs.add_parser(
        "entropy-vs-m", help="entanglement against m at fixed alpha"
    )
    vsm.add_argument("--family", type=parse_family, required=True)
    vsm.add_argument("--alpha", type=parse_alpha_scalar, default=complex(0.2))
    vsm.add_argument(
        "--n", type=parse_int_list, default=(0, 1, 4, 20),
        help="comma-separated n values",
    )
    vsm.add_argument("--m-max", dest="m_max", type=int, default=20)
    _add_output_options(vsm, "render the curves to this image file")
    vsm.set_defaults(handler=run_entropy_vs_m)

    qf = subs.add_parser("qfunc", help="Husimi Q on a 2-D phase-space slice")
    qf.add_argument("--family", type=parse_family, required=True)
    qf.add_argument("--alpha", type=parse_alpha_scalar, default=None)
    qf.add_argument(
        "--alpha2", type=float, default=None,
        help="|alpha|^2 (default 0.05 when --alpha is absent)",
    )
    qf.add_argument("--mn", type=parse_mn, required=True, help="m,n pair")
    qf.add_argument("--range", type=parse_span, default=(-4.0, 4.0))
    qf.add_argument("--points", type=int, default=121)
    qf.add_argument(
        "--axes", type=parse_axes, default=("re_z1", "re_z2"),
        help="axis1,axis2 from re_z1/im_z1 and re_z2/im_z2",
    )
    qf.add_argument(
        "--fixed", type=parse_fixed, default=(0.0, 0.0),
        help="values pinned on the complementary coordinates",
    )
    _add_output_options(qf, "render the grid heatmap to this image file")
    qf.set_defaults(handler=run_qfunc)

    st = subs.add_parser("state", help="dump the truncated number-basis vector")
    st.add_argument("--family", type=parse_family, required=True)
    st.add_argument("--alpha", type=parse_alpha_scalar, required=True)
    st.add_argument("--mn", type=parse_mn, required=True, help="m,n pair")
    st.add_argument("--out", default=None, help="output path (default stdout)")
    st.set_defaults(handler=run_state)

    vf = subs.add_parser("verify", help="run the analytic-vs-oracle cross checks")
    vf.add_argument(
        "--perturb", type=float, default=0.0,
        help="inject a relative fault into the analytic normalization",
    )
    vf.add_argument(
        "--quick", action="store_true", help="smaller grids for a fast smoke run"
    )
    vf.add_argument("--out", default=None, help="JSON report path")
    vf.set_defaults(handler=run_verify)

    return parser


def _rejoin_negative_values(argv: list[str]) -> list[str]:
    """Fold values like -4:4 into --flag=value form.

    argparse reads any token starting with '-' as an option name, so flag
    values that begin with a minus sign would otherwise be rejected.
    """
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok.startswith("--")
            and "=" not in tok
            and nxt is not None
            and len(nxt) > 1
            and nxt[0] == "-"
            and (nxt[1].isdigit() or nxt[1] == ".")
        ):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_rejoin_negative_values(list(argv)))
    try:
        return args.handler(args)
    except _CONFIG_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _NUMERIC_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
