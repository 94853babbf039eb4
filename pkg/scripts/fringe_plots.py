"""Write fringe CSVs and SVG plots for every protocol in the reference table.

    python scripts/fringe_plots.py [--out figures] [--points 4001]
"""

import argparse
from pathlib import Path

from quditramsey.metrics import fringe_metrics
from quditramsey.svg import line_plot
from quditramsey.sweep import TABLE_ONE_PROTOCOLS, SweepSpec, run_sweep


def run():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--points", type=int, default=4001)
    ap.add_argument("--tau", type=float, default=10.0)
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    wm = {}
    for protocol in TABLE_ONE_PROTOCOLS:
        sig = run_sweep(SweepSpec(protocol, tau=args.tau, points=args.points))
        m = fringe_metrics(sig)
        print(f"{protocol.label:>7}  Re={m.resolution:7.3f}  Co={m.contrast:.3f}  RCI={m.rci:7.3f}")
        svg = line_plot(sig.deltas, {protocol.label: sig.probs}, xlabel="detuning",
                        ylabel="probability", legend=f"tau={args.tau:g}")
        (out / f"fringe_{protocol.label}.svg").write_text(svg)
        if protocol.kind == "wm" and protocol.dim in (2, 3, 5, 7):
            wm[f"D={protocol.dim}"] = sig.probs
            deltas = sig.deltas
    (out / "fringes_wm.svg").write_text(
        line_plot(deltas, wm, xlabel="detuning", ylabel="probability", legend=f"tau={args.tau:g}"))
    print(f"wrote plots to {out}/")


if __name__ == "__main__":
    run()
