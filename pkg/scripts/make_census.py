"""Regenerate the gzipped graph6 census files in tests/data with nauty's geng.

usage: python3 scripts/make_census.py [--geng PATH] [--out DIR]
The geng binary is taken from --geng, then $GENG, then PATH.
"""

import argparse
import gzip
import os
import shutil
import subprocess
import sys


def geng_lines(geng: str, *args: str) -> list[str]:
    res = subprocess.run([geng, "-q", *args], capture_output=True, text=True)
    if res.returncode != 0 and "impossible" not in res.stderr:
        sys.exit(f"geng failed: {res.stderr.strip()}")
    return res.stdout.split()


def write(path: str, lines: list[str]) -> None:
    with gzip.GzipFile(path, "wb", mtime=0) as fh:
        fh.write(("\n".join(lines) + "\n").encode())
    print(f"{path}: {len(lines)} graphs")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--geng", default=os.environ.get("GENG") or shutil.which("geng"))
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "tests", "data"))
    ap.add_argument("--max-connected", type=int, default=9)
    ap.add_argument("--max-regular", type=int, default=10)
    args = ap.parse_args()
    if not args.geng:
        sys.exit("geng not found; pass --geng or set GENG")
    os.makedirs(args.out, exist_ok=True)
    for n in range(1, args.max_connected + 1):
        write(os.path.join(args.out, f"connected_n{n}.g6.gz"), geng_lines(args.geng, "-c", str(n)))
    regular = []
    for n in range(1, args.max_regular + 1):
        for r in range(n):
            if n * r % 2 == 0:
                regular += geng_lines(args.geng, "-c", f"-d{r}", f"-D{r}", str(n))
    write(os.path.join(args.out, f"connected_regular_n1-{args.max_regular}.g6.gz"), regular)


if __name__ == "__main__":
    main()
