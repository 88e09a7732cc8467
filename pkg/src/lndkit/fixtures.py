"""Fixture files: a TOML description of a presented ring, a family of
derivations on it, and a list of expectations to verify.

Schema
------
    id = "short-name"

    [ring]
    variables = ["X", "Y", "Z", "T"]
    relations = ["X*Y - Z*T - 1"]
    order = "grevlex"            # optional, default grevlex

    [derivations.D1]
    X = "0"
    Y = "Z"
    Z = "0"
    T = "X"

    [[expect]]
    claim = "lnd-certified"      # see _CLAIM_RUNNERS for the claim kinds
    derivation = "D1"

    [annotations]                # free text, never checked
    domain = "integral domain (assumed)"

Claims: lnd-certified, slice, kernel-generators, bounded-kernel-basis,
intersection-trivial-at-degree, distinct-kernels.  Expectations are
executed independently; one failing or erroring claim does not abort the
rest.  Reports are deterministic given the fixture and options.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib

from .derivations import Derivation, certify_lnd
from .dixmier import kernel_via_slice, _normalize_generators
from .parser import parse_expression
from .poly import TermOrder
from .rings import RingElement, RingPresentation
from .spans import (
    Distinct,
    intersect_spans,
    kernel_basis_bounded,
    kernels_distinct_bounded,
    ml_star_estimate_bounded,
    subalgebra_span_bounded,
)


class FixtureError(ValueError):
    pass


@dataclass
class Fixture:
    id: str
    ring: RingPresentation
    derivations: dict[str, Derivation]
    expectations: list[dict]
    annotations: dict[str, str]

    def element(self, text: str) -> RingElement:
        return self.ring.element(parse_expression(text, self.ring.variables))

    def derivation(self, name: str) -> Derivation:
        try:
            return self.derivations[name]
        except KeyError:
            raise FixtureError(f"unknown derivation {name!r}") from None


def load_fixture(path, order: str | None = None) -> Fixture:
    # accepts str paths, pathlib.Path, and importlib.resources traversables
    fh = path.open("rb") if hasattr(path, "open") else open(path, "rb")
    with fh:
        data = tomllib.load(fh)
    return fixture_from_dict(data, order)


def fixture_from_dict(data: dict, order: str | None = None) -> Fixture:
    """Build a fixture; `order` overrides the ring block's term order."""
    try:
        ring_block = data["ring"]
        variables = tuple(ring_block["variables"])
    except KeyError as e:
        raise FixtureError(f"missing fixture key: {e}") from None
    order = TermOrder(order or ring_block.get("order", "grevlex"))
    relations = [parse_expression(s, variables) for s in ring_block.get("relations", [])]
    ring = RingPresentation(variables, relations, order)

    derivations = {}
    for name, images in data.get("derivations", {}).items():
        missing = set(variables) - set(images)
        if missing:
            raise FixtureError(f"derivation {name!r} lacks images for {sorted(missing)}")
        imgs = {
            v: ring.element(parse_expression(images[v], variables)) for v in variables
        }
        derivations[name] = Derivation(ring, imgs, label=name)

    return Fixture(
        id=data.get("id", "unnamed"),
        ring=ring,
        derivations=derivations,
        expectations=list(data.get("expect", [])),
        annotations=dict(data.get("annotations", {})),
    )


@dataclass
class ClaimResult:
    claim: str
    subject: str
    status: str  # "pass" | "fail" | "inconclusive" | "error"
    detail: str = ""
    witness: str = ""
    millis: float = 0.0


@dataclass
class VerificationReport:
    fixture_id: str
    claims: list[ClaimResult] = field(default_factory=list)
    millis: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.claims)

    def to_dict(self) -> dict:
        return {
            "fixture": self.fixture_id,
            "status": "pass" if self.passed else "fail",
            "millis": round(self.millis, 3),
            "claims": [
                {
                    "claim": c.claim,
                    "subject": c.subject,
                    "status": c.status,
                    "detail": c.detail,
                    "witness": c.witness,
                    "millis": round(c.millis, 3),
                }
                for c in self.claims
            ],
        }

    def render(self) -> str:
        lines = [f"fixture {self.fixture_id}:"]
        for c in self.claims:
            tag = c.status.upper()
            extra = f"  [{c.detail}]" if c.detail else ""
            wit = f"  witness: {c.witness}" if c.witness else ""
            lines.append(f"  {tag:6s} {c.claim} ({c.subject}){extra}{wit}")
        lines.append(f"  => {'PASS' if self.passed else 'FAIL'} ({self.millis:.0f} ms)")
        return "\n".join(lines)


def _claim_lnd_certified(fx: Fixture, exp: dict, opt: dict) -> ClaimResult:
    name = exp["derivation"]
    cert = certify_lnd(fx.derivation(name), opt["max_steps"])
    if not cert.certified:
        return ClaimResult("lnd-certified", name, "inconclusive", detail=cert.status)
    max_index = exp.get("max_index")
    indices = {v: m for v, m in cert.per_generator_index.items()}
    if max_index is not None and max(indices.values()) > max_index:
        return ClaimResult(
            "lnd-certified", name, "fail",
            detail=f"indices {indices} exceed declared max {max_index}",
        )
    return ClaimResult("lnd-certified", name, "pass", detail=f"indices {indices}")


def _claim_slice(fx: Fixture, exp: dict, opt: dict) -> ClaimResult:
    from .dixmier import find_slices

    name = exp["derivation"]
    D = fx.derivation(name)
    expected = fx.element(exp["element"])
    report = find_slices(D)
    if any(s == expected for s in report.slices_found):
        return ClaimResult("slice", name, "pass", detail=f"slice {exp['element']}")
    return ClaimResult(
        "slice", name, "fail",
        detail=f"{exp['element']} not among slices found in: {report.search_space_description}",
    )


def _claim_kernel_generators(fx: Fixture, exp: dict, opt: dict) -> ClaimResult:
    name = exp["derivation"]
    D = fx.derivation(name)
    s = fx.element(exp["slice"])
    computed = kernel_via_slice(D, s, opt["max_steps"]).generators
    expected = _normalize_generators([fx.element(t) for t in exp["generators"]])
    if computed == expected:
        return ClaimResult("kernel-generators", name, "pass", detail=f"{len(computed)} generators")
    comp, expd = set(computed), set(expected)
    diff = [g.to_str() for g in (comp - expd) | (expd - comp)]
    return ClaimResult(
        "kernel-generators", name, "fail",
        detail="generator sets differ", witness="; ".join(sorted(diff)),
    )


def _claim_bounded_kernel_basis(fx: Fixture, exp: dict, opt: dict) -> ClaimResult:
    name = exp["derivation"]
    d = exp.get("degree", opt["degree"])
    D = fx.derivation(name)
    kernel = kernel_basis_bounded(D, d)
    gens = [fx.element(t) for t in exp["generators"]]
    span = subalgebra_span_bounded(fx.ring, gens, d)
    if kernel.basis_vectors == span.basis_vectors:
        return ClaimResult(
            "bounded-kernel-basis", name, "pass",
            detail=f"dimension {kernel.dimension} at degree {d}",
        )
    return ClaimResult(
        "bounded-kernel-basis", name, "fail",
        detail=f"kernel dim {kernel.dimension} vs subalgebra dim {span.dimension} at degree {d}",
    )


def _claim_intersection_trivial(fx: Fixture, exp: dict, opt: dict) -> ClaimResult:
    names = exp["derivations"]
    d = exp.get("degree", opt["degree"])
    subject = ",".join(names)
    slices = exp.get("slices")
    if slices is not None:
        family = [(fx.derivation(n), fx.element(s)) for n, s in zip(names, slices)]
        span = ml_star_estimate_bounded(family, d, opt["max_steps"])
    else:
        span = intersect_spans([kernel_basis_bounded(fx.derivation(n), d) for n in names])
    if span.is_trivial():
        return ClaimResult(
            "intersection-trivial-at-degree", subject, "pass", detail=f"span{{1}} at degree {d}"
        )
    extra = [e.to_str() for e in span.decode() if not e.repr.is_constant()]
    return ClaimResult(
        "intersection-trivial-at-degree", subject, "fail",
        detail=f"dimension {span.dimension} at degree {d}",
        witness="; ".join(extra[:3]),
    )


def _claim_distinct_kernels(fx: Fixture, exp: dict, opt: dict) -> ClaimResult:
    n1, n2 = exp["derivations"]
    d = exp.get("degree", opt["degree"])
    verdict = kernels_distinct_bounded(fx.derivation(n1), fx.derivation(n2), d)
    if isinstance(verdict, Distinct):
        return ClaimResult(
            "distinct-kernels", f"{n1},{n2}", "pass",
            detail=f"witness in Ker {verdict.in_kernel_of} only",
            witness=verdict.witness.to_str(),
        )
    return ClaimResult(
        "distinct-kernels", f"{n1},{n2}", "fail",
        detail=f"not refuted at degree {d}",
    )


_CLAIM_RUNNERS = {
    "lnd-certified": _claim_lnd_certified,
    "slice": _claim_slice,
    "kernel-generators": _claim_kernel_generators,
    "bounded-kernel-basis": _claim_bounded_kernel_basis,
    "intersection-trivial-at-degree": _claim_intersection_trivial,
    "distinct-kernels": _claim_distinct_kernels,
}


def run_fixture(path, degree: int = 3, max_steps: int = 64,
                order: str | None = None) -> VerificationReport:
    """Execute every expectation in a fixture file; per-claim errors are
    recorded in the report instead of aborting the remaining claims."""
    t0 = time.perf_counter()
    fixture = load_fixture(path, order)
    report = VerificationReport(fixture.id)
    opt = {"degree": degree, "max_steps": max_steps}
    for exp in fixture.expectations:
        kind = exp.get("claim", "?")
        runner = _CLAIM_RUNNERS.get(kind)
        t1 = time.perf_counter()
        if runner is None:
            result = ClaimResult(kind, "?", "error", detail=f"unknown claim kind {kind!r}")
        else:
            try:
                result = runner(fixture, exp, opt)
            except Exception as e:  # surfaced per claim, not fatal
                result = ClaimResult(
                    kind, str(exp.get("derivation") or exp.get("derivations", "?")),
                    "error", detail=f"{type(e).__name__}: {e}",
                )
        result.millis = (time.perf_counter() - t1) * 1000
        report.claims.append(result)
    report.millis = (time.perf_counter() - t0) * 1000
    return report
