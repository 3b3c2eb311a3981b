"""Search connected graphs for every matching-complexity value p/q with q <= Q.

usage: python3 scripts/witness_table.py [--max-q 6] [--max-vertices 9] [--seed 0]
"""

import argparse
from fractions import Fraction

from clutter_complexity.clutter import fmt_fraction
from clutter_complexity.families import rational_witness_search
from clutter_complexity.graph import encode_graph6


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-q", type=int, default=6)
    ap.add_argument("--max-vertices", type=int, default=9)
    ap.add_argument("--random-trials", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    targets = sorted({Fraction(p, q) for q in range(1, args.max_q + 1) for p in range(q + 1)})
    print("target\tvertices\twitness\tgraph6")
    for r in targets:
        w = rational_witness_search(r, args.max_vertices, args.random_trials, args.seed)
        if w is None:
            print(f"{fmt_fraction(r)}\t-\tnot found\t-")
        else:
            print(f"{fmt_fraction(r)}\t{w.graph.n}\t{w.label}\t{encode_graph6(w.graph)}")


if __name__ == "__main__":
    main()
