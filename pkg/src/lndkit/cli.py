"""Command-line interface.

Commands operate on fixture files (see `lndkit.fixtures` for the
format).  Exit codes: 0 all checks pass, 1 some check fails, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib import resources

try:
    import tomllib
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

from .derivations import NotWellDefined, certify_lnd
from .dixmier import find_slices, kernel_via_slice
from .fixtures import FixtureError, load_fixture, run_fixture
from .parser import ExprSyntaxError
from .rings import PresentationError
from .spans import intersect_spans, kernel_basis_bounded, ml_star_estimate_bounded

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _add_common(p):
    p.add_argument("--degree", type=int, default=3, help="degree bound (default 3)")
    p.add_argument("--order", choices=("lex", "grevlex"), default=None,
                   help="override the fixture's term order")
    p.add_argument("--max-steps", type=int, default=64,
                   help="nilpotency iteration bound (default 64)")
    p.add_argument("--out", metavar="PATH", help="write a structured JSON report")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lndkit",
        description="Exact computations with locally nilpotent derivations "
        "on finitely presented rings over Q.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify every derivation in a fixture is well defined")
    p.add_argument("file")
    p.add_argument("--order", choices=("lex", "grevlex"), default=None)

    p = sub.add_parser("lnd", help="certify local nilpotency of one derivation")
    p.add_argument("file")
    p.add_argument("derivation")
    p.add_argument("--max-steps", type=int, default=64)
    p.add_argument("--order", choices=("lex", "grevlex"), default=None)

    p = sub.add_parser("slice", help="scan for slices and local slices")
    p.add_argument("file")
    p.add_argument("derivation")
    p.add_argument("--order", choices=("lex", "grevlex"), default=None)

    p = sub.add_parser("kernel", help="kernel generators (via slice) or bounded kernel basis")
    p.add_argument("file")
    p.add_argument("derivation")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--slice", metavar="EXPR", help="a slice element; uses the slice theorem")
    g.add_argument("--degree", type=int, help="degree bound for the linear-algebra kernel")
    p.add_argument("--max-steps", type=int, default=64)
    p.add_argument("--order", choices=("lex", "grevlex"), default=None)

    p = sub.add_parser("intersect", help="intersect bounded kernels of several derivations")
    p.add_argument("file")
    p.add_argument("derivations", nargs="+")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--order", choices=("lex", "grevlex"), default=None)

    p = sub.add_parser("mlstar", help="bounded slice-restricted invariant estimate")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--max-steps", type=int, default=64)
    p.add_argument("--order", choices=("lex", "grevlex"), default=None)

    p = sub.add_parser("verify", help="run every expectation recorded in a fixture")
    p.add_argument("file")
    _add_common(p)

    p = sub.add_parser("corpus", help="run all bundled fixtures")
    _add_common(p)
    p.add_argument("--jobs", type=int, default=1, help="fixtures to run concurrently")

    return ap


def _cmd_check(args) -> int:
    try:
        fixture = load_fixture(args.file, args.order)
    except NotWellDefined as e:
        print(f"NOT WELL DEFINED: {e}")
        return EXIT_FAIL
    for name, D in fixture.derivations.items():
        imgs = ", ".join(f"{v} -> {e.to_str()}" for v, e in D.images.items())
        print(f"ok {name}: {imgs}")
    print(f"{len(fixture.derivations)} derivation(s) well defined on {fixture.ring!r}")
    return EXIT_PASS


def _cmd_lnd(args) -> int:
    fixture = load_fixture(args.file, args.order)
    cert = certify_lnd(fixture.derivation(args.derivation), args.max_steps)
    print(f"{args.derivation}: {cert.status}")
    for v, m in cert.per_generator_index.items():
        shown = m if isinstance(m, int) else f"> {m.bound}"
        print(f"  index({v}) = {shown}")
    return EXIT_PASS if cert.certified else EXIT_FAIL


def _cmd_slice(args) -> int:
    fixture = load_fixture(args.file, args.order)
    report = find_slices(fixture.derivation(args.derivation))
    print(f"search space: {report.search_space_description}")
    for s in report.slices_found:
        print(f"slice: {s.to_str()}")
    for r, t in report.local_slices_found:
        print(f"local slice: ({r.to_str()}, {t.to_str()})")
    if not report.slices_found and not report.local_slices_found:
        print("no slices or local slices found in the search space")
    return EXIT_PASS


def _cmd_kernel(args) -> int:
    fixture = load_fixture(args.file, args.order)
    D = fixture.derivation(args.derivation)
    if args.slice is not None:
        s = fixture.element(args.slice)
        pres = kernel_via_slice(D, s, args.max_steps)
        print(f"kernel generators of {D.label} via {pres.via}:")
        for g in pres.generators:
            print(f"  {g.to_str()}")
    else:
        span = kernel_basis_bounded(D, args.degree)
        print(f"bounded kernel basis of {D.label} at degree {args.degree} "
              f"(dimension {span.dimension}):")
        for e in span.decode():
            print(f"  {e.to_str()}")
    return EXIT_PASS


def _cmd_intersect(args) -> int:
    fixture = load_fixture(args.file, args.order)
    spans = [
        kernel_basis_bounded(fixture.derivation(n), args.degree)
        for n in args.derivations
    ]
    span = intersect_spans(spans)
    print(f"intersection at degree {args.degree}: dimension {span.dimension}")
    for e in span.decode():
        print(f"  {e.to_str()}")
    if span.is_trivial():
        print("trivial (constants only) up to this degree")
    return EXIT_PASS


def _cmd_mlstar(args) -> int:
    fixture = load_fixture(args.file, args.order)
    family = []
    for name, D in fixture.derivations.items():
        report = find_slices(D)
        if report.slices_found:
            family.append((D, report.slices_found[0]))
            print(f"{name}: slice {report.slices_found[0].to_str()}")
        else:
            print(f"{name}: no slice found, excluded from the family")
    if not family:
        print("no derivation with a slice: estimate is the whole ring (vacuous)")
        return EXIT_FAIL
    span = ml_star_estimate_bounded(family, args.degree, args.max_steps)
    print(f"estimate at degree {args.degree}: dimension {span.dimension}")
    for e in span.decode():
        print(f"  {e.to_str()}")
    if span.is_trivial():
        print(f"trivial (constants only) up to degree {args.degree}, "
              f"relative to this {len(family)}-derivation family")
    return EXIT_PASS


def _emit(reports, out_path) -> int:
    for rep in reports:
        print(rep.render())
    if out_path:
        payload = [rep.to_dict() for rep in reports]
        with open(out_path, "w") as fh:
            json.dump(payload if len(payload) > 1 else payload[0], fh, indent=2)
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_verify(args) -> int:
    rep = run_fixture(args.file, degree=args.degree, max_steps=args.max_steps, order=args.order)
    return _emit([rep], args.out)


def corpus_paths():
    root = resources.files("lndkit") / "corpus"
    return sorted(p for p in root.iterdir() if p.name.endswith(".toml"))


def _cmd_corpus(args) -> int:
    paths = corpus_paths()
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(
                lambda p: run_fixture(p, degree=args.degree, max_steps=args.max_steps, order=args.order),
                paths,
            ))
    else:
        reports = [run_fixture(p, degree=args.degree, max_steps=args.max_steps, order=args.order) for p in paths]
    return _emit(reports, args.out)


_COMMANDS = {
    "check": _cmd_check,
    "lnd": _cmd_lnd,
    "slice": _cmd_slice,
    "kernel": _cmd_kernel,
    "intersect": _cmd_intersect,
    "mlstar": _cmd_mlstar,
    "verify": _cmd_verify,
    "corpus": _cmd_corpus,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ExprSyntaxError, FixtureError, PresentationError, tomllib.TOMLDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, RuntimeError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
