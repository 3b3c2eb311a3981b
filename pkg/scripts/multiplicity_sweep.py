"""How small can the element multiplicity of the second gadget be?

For random Set Cover instances this reports the least multiplicity at
which c(G_I) = l_min/m already holds, next to the default (n+m)^2.

usage: python3 scripts/multiplicity_sweep.py [--instances 30] [--seed 1]
"""

import argparse
import random

from clutter_complexity.reductions import random_instance, verify_reduction


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--instances", type=int, default=30)
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print("n\tm\tl_min\tleast_k\tdefault_k")
    for _ in range(args.instances):
        inst = random_instance(rng, rng.randint(1, args.max_size), rng.randint(1, args.max_size))
        default = (inst.n + inst.m) ** 2
        least = next(k for k in range(1, default + 1)
                     if all(verify_reduction(inst, "problem2", j).holds for j in range(k, default + 1)))
        rep = verify_reduction(inst, "problem2", least)
        print(f"{inst.n}\t{inst.m}\t{rep.l_min}\t{least}\t{default}")


if __name__ == "__main__":
    main()
