"""QFI versus detuning for the WM, QFT and sqrt(X) protocols, as CSV plus SVG.

    python scripts/qfi_curves.py [--dims 2,3,4,5] [--out figures]
"""

import argparse
from pathlib import Path

import numpy as np

from quditramsey.metrics import qfi
from quditramsey.protocols import Protocol
from quditramsey.svg import line_plot
from quditramsey.wm_model import WmSystem


def run():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", default="2,3,4,5")
    ap.add_argument("--points", type=int, default=201)
    ap.add_argument("--tau", type=float, default=10.0)
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()

    dims = [int(d) for d in args.dims.split(",")]
    deltas = np.linspace(-5, 5, args.points)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for kind in ("wm", "qft", "sqrtx"):
        curves = {f"D={d}": np.array([qfi(Protocol(kind, d), WmSystem(d, x), args.tau) for x in deltas])
                  for d in dims}
        (out / f"qfi_{kind}.svg").write_text(
            line_plot(deltas, curves, xlabel="detuning", ylabel="QFI", legend=f"{kind}, tau={args.tau:g}"))
        mid = args.points // 2
        print(kind, "  ".join(f"{k}: {v[mid]:.2f}" for k, v in curves.items()), "(at zero detuning)")
    print(f"wrote plots to {out}/")


if __name__ == "__main__":
    run()
