#!/usr/bin/env python3
"""The flagship exact instance: sweep all 2^13 circulant columns at p=13,
compare the exact Pr[d <= 4] against the prime-case cap, and confirm codes
with d >= 5 exist (the volume argument alone only guarantees d >= 4).

Usage: python scripts/p13_exhaustive.py [outdir]

Writes records CSV, summary JSON, and both plot kinds; prints the verdict.
"""

import subprocess
import sys


def run(*argv: str) -> None:
    proc = subprocess.run(argv)
    if proc.returncode:
        sys.exit(proc.returncode)


def main() -> int:
    outdir = sys.argv[1] if len(sys.argv) > 1 else "results"
    csv = f"{outdir}/p13.csv"
    run("gvdc", "experiment", "--p", "13", "--exhaustive",
        "--out", csv, "--summary", f"{outdir}/p13.json")
    run("gvdc", "plot", "--records", csv, "--kind", "histogram",
        "--out", f"{outdir}/p13_hist.svg")
    run("gvdc", "plot", "--records", csv, "--kind", "threshold-overlay",
        "--out", f"{outdir}/p13_overlay.svg")
    print(f"done; see {outdir}/p13.json for the exact fraction vs the cap")
    return 0


if __name__ == "__main__":
    sys.exit(main())
