"""Exhaustive tree experiment: labels, complexity-one sets and the leaf construction.

usage: python3 scripts/tree_suite.py [--max-n 14]
"""

import argparse
import time
from collections import Counter

import networkx as nx

from clutter_complexity.graph import from_networkx
from clutter_complexity.trees import (
    COMPLETIONS,
    CertificateFailure,
    check_necessary_condition,
    complexity_one_sets,
    construct_full_complexity_mis,
    label_tree,
    membership_rule_violations,
)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=14)
    args = ap.parse_args()
    variants = {"full": COMPLETIONS, "no_alpha_groups": frozenset({"pendant-spec"}),
                "no_pendant_spec": frozenset({"alpha-groups"})}
    print("n\ttrees\tc=1\tnecessary\teligible\tconstructions\t"
          + "\t".join(f"fail_{k}" for k in variants) + "\tseconds")
    for n in range(2, args.max_n + 1):
        t0 = time.perf_counter()
        c = Counter()
        for nxt in nx.nonisomorphic_trees(n):
            t = from_networkx(nxt)
            lab = label_tree(t)
            c["trees"] += 1
            assert not membership_rule_violations(t, lab)
            c["c1"] += bool(complexity_one_sets(t))
            c["necessary"] += check_necessary_condition(t, lab).holds
            if lab.beta or lab.pure_delta:
                continue
            c["eligible"] += 1
            for leaf in (v for v in range(n) if t.degree(v) == 1):
                c["constructions"] += 1
                for name, comp in variants.items():
                    try:
                        construct_full_complexity_mis(t, leaf, comp)
                    except CertificateFailure:
                        c[name] += 1
        fails = "\t".join(str(c[k]) for k in variants)
        print(f"{n}\t{c['trees']}\t{c['c1']}\t{c['necessary']}\t{c['eligible']}\t"
              f"{c['constructions']}\t{fails}\t{time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
