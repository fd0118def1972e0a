#!/usr/bin/env python3
"""Run every lemma/bound audit at acceptance scope and write the report.

Usage: python scripts/full_audit.py [outdir] [--trials N] [--seed S]

Exits nonzero if anything is violated.  Expect a few minutes; the Monte
Carlo sweeps at n in {25, 27} dominate.
"""

import argparse
import sys
import time

from gvdc import run_all
from gvdc.cli import _emit_outputs, _report_json


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", nargs="?", default="results")
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    started = time.time()
    reports = run_all(mc_trials=args.trials, seed=args.seed)
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in r.parameters.items())
        print(f"{r.lemma:28s} {r.status:17s} [{params}]")
    bad = [r for r in reports if not r.ok()]
    config = {"trials": args.trials, "seed": args.seed}
    out = f"{args.outdir}/audit.json"
    _emit_outputs("full-audit", config, {out: _report_json(reports, config)},
                  out, {}, started)
    print(f"\n{len(reports)} checks, {len(bad)} violated -> {out}")
    return 2 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
