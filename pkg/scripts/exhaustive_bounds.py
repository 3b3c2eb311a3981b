"""Tally lower bounds over the connected-graph census in tests/data.

usage: python3 scripts/exhaustive_bounds.py [--max-n 8] [--bound main --bound degree ...]
"""

import argparse
import gzip
import json
import os

from clutter_complexity.verification import GRAPH_BOUNDS, bound_scan

DATA = os.path.join(os.path.dirname(__file__), "..", "tests", "data")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--bound", action="append", choices=GRAPH_BOUNDS)
    args = ap.parse_args()
    kinds = args.bound or ["main", "degree", "matching_lower"]
    for n in range(args.min_n, args.max_n + 1):
        with gzip.open(os.path.join(DATA, f"connected_n{n}.g6.gz"), "rt") as fh:
            rep = bound_scan(fh, kinds)
        print(json.dumps({"n": n, "elapsed": round(rep.elapsed, 2), **rep.to_json()}))


if __name__ == "__main__":
    main()
