#!/usr/bin/env python3
"""Run every bundled fixture and print a timing table.

Usage: python scripts/run_corpus.py [--degree D] [--max-steps N] [--jobs J]
"""

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from lndkit.cli import corpus_paths
from lndkit.fixtures import run_fixture


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--max-steps", type=int, default=64)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    paths = corpus_paths()
    run = lambda p: run_fixture(p, degree=args.degree, max_steps=args.max_steps)
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run, paths))
    else:
        reports = [run(p) for p in paths]

    for rep in reports:
        print(rep.render())
        print()
    width = max(len(r.fixture_id) for r in reports)
    print(f"{'fixture':{width}}  claims  status  time")
    for rep in reports:
        status = "pass" if rep.passed else "FAIL"
        print(f"{rep.fixture_id:{width}}  {len(rep.claims):6d}  {status:6s}  {rep.millis/1000:.1f}s")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
