"""Bounded-degree vector-space snapshots of subspaces of B.

Everything here is exact linear algebra over Q on the finite frame of
normal-form monomials of total degree <= d.  Kernels of derivations,
spans of finitely generated subalgebras, and their intersections become
row spaces over that frame; `span{1}` at degree d is the desk-scale
certificate corresponding to "the invariant is trivial", relative to the
supplied derivation family and degree bound (always one-sided: larger
degrees could in principle reveal more, so every result carries d).

"Degree" throughout means total degree of the normal-form representative
under the ring's fixed term order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .derivations import Derivation, apply, certify_lnd
from .dixmier import UncertifiedDerivation, is_slice
from .poly import Monomial, Polynomial
from .rings import RingElement, RingPresentation

DEFAULT_FRAME_CAP = 20000


class ResourceBound(RuntimeError):
    """A frame exceeded the configured monomial-count cap."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"monomial frame needs {count} entries, cap is {cap}")


class DegreeOverflow(ValueError):
    """An element does not fit in the degree-bounded frame."""


class SliceVerificationError(ValueError):
    pass


def _exponent_tuples(nvars: int, max_total: int):
    """All exponent tuples with sum <= max_total."""
    if nvars == 0:
        yield ()
        return
    for e in range(max_total + 1):
        for rest in _exponent_tuples(nvars - 1, max_total - e):
            yield (e,) + rest


def monomial_frame(ring: RingPresentation, d: int, cap: int = DEFAULT_FRAME_CAP) -> list[Monomial]:
    """Normal-form monomials of degree <= d, sorted descending in the
    ring's order.  These are the standard monomials: not divisible by
    any leading monomial of the Groebner basis."""
    if d < 0:
        raise ValueError("degree bound must be >= 0")
    n = len(ring.variables)
    leads = [g.leading_monomial(ring.order) for g in ring.groebner]
    out = []
    count = 0
    for exps in _exponent_tuples(n, d):
        m = Monomial({i: e for i, e in enumerate(exps)})
        if any(lm.divides(m) for lm in leads):
            continue
        count += 1
        if count > cap:
            raise ResourceBound(count, cap)
        out.append(m)
    out.sort(key=lambda m: ring.order.sort_key(m, n), reverse=True)
    return out


@dataclass
class SpanBasis:
    """A subspace of B, as an RREF matrix over a monomial frame."""

    ring: RingPresentation
    degree_bound: int
    monomial_frame: list[Monomial]
    basis_vectors: list[list[Fraction]]
    provenance: str

    @property
    def dimension(self) -> int:
        return len(self.basis_vectors)

    def decode(self) -> list[RingElement]:
        """The basis rows as ring elements."""
        out = []
        for row in self.basis_vectors:
            terms = {m: c for m, c in zip(self.monomial_frame, row) if c}
            out.append(self.ring.element(Polynomial(self.ring.variables, terms)))
        return out

    def vector_of(self, f: RingElement) -> list[Fraction]:
        if f.ring != self.ring:
            raise ValueError("element belongs to a different ring")
        if f.degree > self.degree_bound:
            raise DegreeOverflow(
                f"degree {f.degree} exceeds the frame bound {self.degree_bound}"
            )
        index = {m: i for i, m in enumerate(self.monomial_frame)}
        vec = [Fraction(0)] * len(self.monomial_frame)
        for m, c in f.repr.terms.items():
            vec[index[m]] = c
        return vec

    def is_trivial(self) -> bool:
        """True iff the span is exactly the constants."""
        if self.dimension != 1:
            return False
        return self.decode()[0].repr.is_constant()


def kernel_basis_bounded(
    D: Derivation, d: int, cap: int = DEFAULT_FRAME_CAP
) -> SpanBasis:
    """Basis of {f in B : deg f <= d, D(f) = 0}.

    Computed as the exact nullspace of the linear map m |-> nf(D(m))
    from the degree-<=d frame into the span of all image monomials.
    """
    ring = D.ring
    frame = monomial_frame(ring, d, cap)
    images = [apply(D, ring.element(Polynomial(ring.variables, {m: 1}))) for m in frame]
    target: dict[Monomial, int] = {}
    for img in images:
        for m in img.repr.terms:
            target.setdefault(m, len(target))
    if len(target) > cap:
        raise ResourceBound(len(target), cap)
    # columns of `stacked` are source monomials, rows are target monomials
    stacked = [[Fraction(0)] * len(frame) for _ in range(len(target))]
    for j, img in enumerate(images):
        for m, c in img.repr.terms.items():
            stacked[target[m]][j] = c
    kernel = linalg.nullspace(stacked, len(frame))
    return SpanBasis(ring, d, frame, linalg.rref(kernel), provenance=f"kernel({D.label}, d={d})")


def subalgebra_span_bounded(
    ring: RingPresentation,
    gens: list[RingElement],
    d: int,
    cap: int = DEFAULT_FRAME_CAP,
) -> SpanBasis:
    """Span of all power products of `gens` whose normal form has degree
    <= d.  Products are enumerated up to total product-degree d (using
    the generators' normal-form degrees) and post-filtered by the degree
    of the reduced product; constants and zero generators contribute
    nothing beyond the empty product."""
    useful = [g for g in gens if not g.is_zero() and not g.repr.is_constant()]
    for g in useful:
        if g.ring != ring:
            raise ValueError("generator belongs to a different ring")
    frame = monomial_frame(ring, d, cap)
    span = SpanBasis(ring, d, frame, [], provenance="")
    rows = [span.vector_of(ring.one())]
    degs = [g.degree for g in useful]

    # enumerate exponent vectors with sum(e_i * deg_i) <= d
    def enumerate_products(i: int, budget: int, acc: RingElement):
        if i == len(useful):
            return
        power = acc
        e = 0
        while (e + 1) * degs[i] <= budget:
            e += 1
            power = power * useful[i]
            if not power.is_zero() and power.degree <= d:
                rows.append(span.vector_of(power))
            enumerate_products(i + 1, budget - e * degs[i], power)
        enumerate_products(i + 1, budget, acc)

    enumerate_products(0, d, ring.one())
    names = ", ".join(g.to_str() for g in gens)
    return SpanBasis(ring, d, frame, linalg.rref(rows), provenance=f"subalgebra([{names}], d={d})")


def intersect_spans(bases: list[SpanBasis]) -> SpanBasis:
    """Exact intersection of row spaces sharing one ring and bound."""
    if not bases:
        raise ValueError("need at least one span")
    first = bases[0]
    for s in bases[1:]:
        if s.ring != first.ring or s.degree_bound != first.degree_bound:
            raise ValueError("spans disagree on ring or degree bound")
    rows = first.basis_vectors
    ncols = len(first.monomial_frame)
    for s in bases[1:]:
        rows = linalg.intersect_row_spaces(rows, s.basis_vectors, ncols)
    prov = "intersection(" + "; ".join(s.provenance for s in bases) + ")"
    return SpanBasis(first.ring, first.degree_bound, first.monomial_frame, linalg.rref(rows), prov)


def ml_star_estimate_bounded(
    derivations: list[tuple[Derivation, RingElement]],
    d: int,
    nilpotency_bound: int = 64,
    cap: int = DEFAULT_FRAME_CAP,
) -> SpanBasis:
    """Degree-<=d intersection of the kernels of a family of locally
    nilpotent derivations with verified slices.

    `span{1}` here is the bounded certificate matching triviality of the
    slice-restricted Makar-Limanov invariant relative to this family.
    """
    if not derivations:
        raise ValueError("need at least one (derivation, slice) pair")
    kernels = []
    for D, s in derivations:
        if not certify_lnd(D, nilpotency_bound).certified:
            raise UncertifiedDerivation(f"{D.label} not certified within {nilpotency_bound}")
        if not is_slice(D, s):
            raise SliceVerificationError(
                f"{D.label}({s.to_str()}) != 1: not a slice"
            )
        kernels.append(kernel_basis_bounded(D, d, cap))
    return intersect_spans(kernels)


@dataclass(frozen=True)
class Distinct:
    witness: RingElement
    in_kernel_of: str


@dataclass(frozen=True)
class NotRefuted:
    degree_bound: int


def kernels_distinct_bounded(D1: Derivation, D2: Derivation, d: int, cap: int = DEFAULT_FRAME_CAP):
    """Refute Ker D1 = Ker D2 by exhibiting a degree-<=d witness in
    exactly one bounded kernel; bounded search cannot prove equality,
    so the negative answer is `NotRefuted`."""
    k1 = kernel_basis_bounded(D1, d, cap)
    k2 = kernel_basis_bounded(D2, d, cap)
    for row, elem in zip(k1.basis_vectors, k1.decode()):
        if not linalg.in_row_space(row, k2.basis_vectors):
            return Distinct(elem, D1.label)
    for row, elem in zip(k2.basis_vectors, k2.decode()):
        if not linalg.in_row_space(row, k1.basis_vectors):
            return Distinct(elem, D2.label)
    return NotRefuted(d)


def membership_in_span(f: RingElement, span: SpanBasis) -> bool:
    """True iff f lies in the row space (exact rational solve)."""
    return linalg.in_row_space(span.vector_of(f), span.basis_vectors)
