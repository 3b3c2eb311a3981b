"""Matching complexity of every connected regular graph in the census, by degree.

usage: python3 scripts/regular_suite.py
"""

import gzip
import os
from collections import defaultdict

from clutter_complexity.clutter import fmt_fraction
from clutter_complexity.graph import graph_stats, parse_graph6
from clutter_complexity.verification import conjecture_class, exact_matching_complexity_early

PATH = os.path.join(os.path.dirname(__file__), "..", "tests", "data", "connected_regular_n1-10.g6.gz")


def main() -> None:
    table = defaultdict(lambda: defaultdict(int))
    below_one = []
    with gzip.open(PATH, "rt") as fh:
        for code in fh.read().split():
            g = parse_graph6(code)
            st = graph_stats(g)
            if st.m == 0:
                continue
            c = exact_matching_complexity_early(g)
            table[(st.n, st.regularity)][fmt_fraction(c)] += 1
            if c < 1:
                below_one.append((code, st.n, st.regularity, fmt_fraction(c), conjecture_class(g)))
    print("n\tr\tcount by c")
    for (n, r), counts in sorted(table.items()):
        print(f"{n}\t{r}\t{dict(sorted(counts.items()))}")
    print("\ngraphs with c < 1:")
    for row in below_one:
        print("\t".join(map(str, row)))


if __name__ == "__main__":
    main()
