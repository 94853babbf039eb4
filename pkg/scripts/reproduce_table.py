"""Recompute the resolution/contrast/RCI table and compare with the reference values.

    python scripts/reproduce_table.py [--points 4001] [--workers 4] [--csv out/table.csv]
"""

import argparse
import time

from quditramsey.cli import main as cli_main


def run():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=4001)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--csv", default=None)
    args = ap.parse_args()

    argv = ["table", "--points", str(args.points), "--workers", str(args.workers)]
    if args.csv:
        argv += ["--csv", args.csv, "--force"]
    start = time.perf_counter()
    code = cli_main(argv)
    print(f"elapsed {time.perf_counter() - start:.2f}s")
    return code


if __name__ == "__main__":
    raise SystemExit(run())
