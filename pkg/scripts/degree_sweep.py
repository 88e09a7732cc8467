#!/usr/bin/env python3
"""Sweep the degree bound and watch kernel intersections stabilize.

For the quadric threefold Q[X,Y,Z,T]/(XY - ZT - 1) with its four
standard derivations, prints the dimension of each bounded kernel and
of their common intersection as the degree bound grows.  The
intersection staying at dimension 1 (constants only) is the
degree-bounded shadow of a trivial Makar-Limanov invariant.

Usage: python scripts/degree_sweep.py [--max-degree D]
"""

import argparse
import time

from lndkit import (
    Derivation,
    RingPresentation,
    TermOrder,
    intersect_spans,
    kernel_basis_bounded,
)
from lndkit.parser import parse_expression


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=4)
    args = ap.parse_args()

    variables = ("X", "Y", "Z", "T")
    ring = RingPresentation(
        variables,
        [parse_expression("X*Y - Z*T - 1", variables)],
        TermOrder("grevlex"),
    )
    images = [
        {"X": "0", "Y": "Z", "Z": "0", "T": "X"},
        {"X": "0", "Y": "T", "Z": "X", "T": "0"},
        {"X": "Z", "Y": "0", "Z": "0", "T": "Y"},
        {"X": "T", "Y": "0", "Z": "Y", "T": "0"},
    ]
    ds = [
        Derivation(
            ring,
            {v: ring.element(parse_expression(e, variables)) for v, e in im.items()},
            label=f"D{i + 1}",
        )
        for i, im in enumerate(images)
    ]

    print("degree  " + "  ".join(f"dim Ker {D.label}" for D in ds) + "  dim inter  time")
    for d in range(1, args.max_degree + 1):
        t0 = time.perf_counter()
        spans = [kernel_basis_bounded(D, d) for D in ds]
        meet = intersect_spans(spans)
        dt = time.perf_counter() - t0
        dims = "  ".join(f"{s.dimension:10d}" for s in spans)
        print(f"{d:6d}  {dims}  {meet.dimension:9d}  {dt:.2f}s")
        if meet.dimension > 1:
            extras = [e.to_str() for e in meet.decode() if not e.repr.is_constant()]
            print(f"        nonconstant intersection elements: {', '.join(extras)}")


if __name__ == "__main__":
    main()
