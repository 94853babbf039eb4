"""Command-line entry point: ``quditramsey {sweep,table,qfi}``.

Exit status is 0 on success, 1 when a computation or output step fails and 2
for malformed arguments.
"""

from __future__ import annotations

import argparse
import shlex
import sys
from pathlib import Path

import numpy as np

from . import svg
from .metrics import UndefinedResolutionError, fringe_metrics, qfi
from .protocols import Protocol, ProtocolKind
from .sweep import DEFAULT_POINTS, TABLE_ONE_REFERENCE, SweepSpec, run_sweep, table_one
from .wm_model import DEFAULT_PULSE, DEFAULT_TAU, WmSystem, default_rabi

PROG = "quditramsey"


def fmt(v: float) -> str:
    s = f"{v:.9f}"
    return s[1:] if s.startswith("-") and float(s) == 0.0 else s


def _csv_text(header: dict, columns: list[str], rows) -> str:
    lines = [f"# {k}={v}" for k, v in header.items()]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(c if isinstance(c, str) else fmt(c) for c in row))
    return "\n".join(lines) + "\n"


def _write(path: str | None, text: str, force: bool) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    p = Path(path)
    if p.exists() and not force:
        raise FileExistsError(f"{p} exists; pass --force to overwrite")
    p.parent.mkdir(parents=True, exist_ok=True)
    with open(p, "w", newline="\n") as fh:
        fh.write(text)


def _command(sub: str, args: argparse.Namespace, keys: list[tuple[str, str]]) -> str:
    parts = [PROG, sub]
    for flag, attr in keys:
        value = getattr(args, attr)
        if value is not None:
            parts += [flag, str(value)]
    return shlex.join(parts)


def _add_physics(p: argparse.ArgumentParser, lo: float, hi: float, points: int) -> None:
    p.add_argument("--tau", type=float, default=DEFAULT_TAU, help="interrogation time (default 10)")
    p.add_argument("--pulse", type=float, default=DEFAULT_PULSE, help="pulse duration T (default 1)")
    p.add_argument("--rabi", type=float, default=None, help="Rabi frequency (default pi/(2T))")
    p.add_argument("--from", dest="delta_min", type=float, default=lo, help=f"lowest detuning (default {lo})")
    p.add_argument("--to", dest="delta_max", type=float, default=hi, help=f"highest detuning (default {hi})")
    p.add_argument("--points", type=int, default=points, help=f"odd number of grid points (default {points})")
    p.add_argument("--force", action="store_true", help="overwrite existing output files")


def _physics_keys() -> list[tuple[str, str]]:
    return [("--tau", "tau"), ("--pulse", "pulse"), ("--rabi", "rabi"),
            ("--from", "delta_min"), ("--to", "delta_max"), ("--points", "points")]


def cmd_sweep(args: argparse.Namespace) -> int:
    spec = SweepSpec(
        Protocol(args.protocol, args.dim), tau=args.tau, pulse_duration=args.pulse,
        rabi=args.rabi, delta_min=args.delta_min, delta_max=args.delta_max, points=args.points,
    )
    sig = run_sweep(spec, workers=args.workers)
    header = {"command": _command("sweep", args, [("--protocol", "protocol"), ("--dim", "dim")] + _physics_keys())}
    header.update({k: repr(v) if isinstance(v, float) else v for k, v in spec.meta().items()})
    _write(args.out, _csv_text(header, ["delta", "probability"], zip(sig.deltas, sig.probs)), args.force)
    if args.svg:
        legend = f"{spec.protocol.label}: tau={spec.tau:g}, Omega={spec.rabi:.4g}, T={spec.pulse_duration:g}"
        _write(args.svg, svg.line_plot(sig.deltas, {spec.protocol.label: sig.probs},
                                       xlabel="detuning", ylabel="probability", legend=legend), args.force)
    if args.metrics:
        m = fringe_metrics(sig)
        print(f"resolution={fmt(m.resolution)} contrast={fmt(m.contrast)} rci={fmt(m.rci)}", file=sys.stderr)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    rows = table_one(points=args.points, workers=args.workers)
    head = f"{'protocol':>8} {'Re':>9} {'Co':>7} {'RCI':>9} | {'Re(ref)':>8} {'Co(ref)':>7} {'RCI(ref)':>8} {'dRe':>7} {'dRCI':>7}"
    print(head)
    print("-" * len(head))
    failed = False
    for r in rows:
        ref = TABLE_ONE_REFERENCE[r.label]
        if not r.defined:
            failed = True
            print(f"{r.label:>8} undefined: {r.error}")
            continue
        d_re = (r.resolution - ref[0]) / ref[0]
        d_rci = (r.rci - ref[2]) / ref[2]
        print(f"{r.label:>8} {r.resolution:9.3f} {r.contrast:7.3f} {r.rci:9.3f} | "
              f"{ref[0]:8.3f} {ref[1]:7.3f} {ref[2]:8.3f} {d_re:+7.2%} {d_rci:+7.2%}")
    if args.csv:
        header = {"command": _command("table", args, [("--points", "points")]),
                  "tau": repr(DEFAULT_TAU), "pulse": repr(DEFAULT_PULSE),
                  "rabi": repr(default_rabi(DEFAULT_PULSE)), "from": "-1.0", "to": "1.0",
                  "points": args.points}
        body = [(r.label, r.resolution, r.contrast, r.rci) if r.defined else (r.label, "nan", "nan", "nan")
                for r in rows]
        _write(args.csv, _csv_text(header, ["protocol", "resolution", "contrast", "rci"], body), args.force)
    return 1 if failed else 0


def _int_list(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or min(values) < 2:
        raise argparse.ArgumentTypeError("dimensions must be integers >= 2")
    return values


def _kind_list(text: str) -> list[ProtocolKind]:
    try:
        return [ProtocolKind(t.strip()) for t in text.split(",") if t.strip()]
    except ValueError:
        choices = ",".join(k.value for k in ProtocolKind)
        raise argparse.ArgumentTypeError(f"protocols must be drawn from {choices}, got {text!r}")


def cmd_qfi(args: argparse.Namespace) -> int:
    spec = SweepSpec(Protocol(ProtocolKind.WM_RAMSEY, 2), tau=args.tau, pulse_duration=args.pulse,
                     rabi=args.rabi, delta_min=args.delta_min, delta_max=args.delta_max, points=args.points)
    grid = spec.grid()
    columns: dict[str, np.ndarray] = {}
    for kind in args.protocols:
        for dim in args.dims:
            proto = Protocol(kind, dim)
            base = WmSystem(dim, 0.0, spec.pulse_duration, spec.rabi)
            columns[f"{kind.value}_D{dim}"] = np.array(
                [qfi(proto, base.with_detuning(d), spec.tau) for d in grid])
    args.dims_text = ",".join(map(str, args.dims))
    args.protocols_text = ",".join(k.value for k in args.protocols)
    header = {"command": _command("qfi", args, [("--dims", "dims_text"), ("--protocols", "protocols_text")]
                                  + _physics_keys()),
              "tau": repr(spec.tau), "rabi": repr(spec.rabi), "pulse": repr(spec.pulse_duration),
              "from": repr(spec.delta_min), "to": repr(spec.delta_max), "points": spec.points}
    rows = zip(grid, *columns.values())
    _write(args.out, _csv_text(header, ["delta", *columns], rows), args.force)
    if args.svg:
        legend = f"tau={spec.tau:g}, Omega={spec.rabi:.4g}, T={spec.pulse_duration:g}"
        _write(args.svg, svg.line_plot(grid, columns, xlabel="detuning", ylabel="QFI", legend=legend), args.force)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Qudit Ramsey interferometry on Wigner-Majorana ladders.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="detuning sweep of one protocol, written as CSV")
    p.add_argument("--protocol", choices=[k.value for k in ProtocolKind], default="wm")
    p.add_argument("--dim", type=int, required=True, help="qudit dimension D >= 2")
    _add_physics(p, -1.0, 1.0, DEFAULT_POINTS)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.add_argument("--svg", help="also write a line plot here")
    p.add_argument("--metrics", action="store_true", help="report resolution/contrast/RCI on stderr")
    p.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    p.set_defaults(func=cmd_sweep, subparser=p)

    p = sub.add_parser("table", help="resolution/contrast/RCI for the eight reference protocols")
    p.add_argument("--points", type=int, default=DEFAULT_POINTS, help=f"grid points (default {DEFAULT_POINTS})")
    p.add_argument("--csv", help="also write the table as CSV here")
    p.add_argument("--force", action="store_true", help="overwrite existing output files")
    p.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    p.set_defaults(func=cmd_table, subparser=p)

    p = sub.add_parser("qfi", help="quantum Fisher information versus detuning")
    p.add_argument("--dims", type=_int_list, default=[2, 3, 4, 5], help="comma-separated dimensions (default 2,3,4,5)")
    p.add_argument("--protocols", type=_kind_list, default=[ProtocolKind.WM_RAMSEY],
                   help="comma-separated subset of wm,qft,sqrtx (default wm)")
    _add_physics(p, -5.0, 5.0, 401)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.add_argument("--svg", help="also write a line plot here")
    p.set_defaults(func=cmd_qfi, subparser=p)
    return parser


def _check(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    problems = []
    if args.points < 3 or args.points % 2 == 0:
        problems.append(f"--points must be odd and >= 3 (got {args.points})")
    if getattr(args, "dim", 2) < 2:
        problems.append(f"--dim must be >= 2 (got {args.dim})")
    if getattr(args, "workers", 1) < 1:
        problems.append(f"--workers must be >= 1 (got {args.workers})")
    if hasattr(args, "tau"):
        if not args.delta_min < args.delta_max:
            problems.append(f"--from must be below --to (got {args.delta_min} >= {args.delta_max})")
        if args.tau < 0:
            problems.append(f"--tau must be >= 0 (got {args.tau})")
        if args.pulse <= 0:
            problems.append(f"--pulse must be positive (got {args.pulse})")
    if problems:
        parser.error("; ".join(problems))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check(args.subparser, args)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError, UndefinedResolutionError) as exc:
        print(f"{PROG} {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
