"""Slice detection, the Dixmier homomorphism, and slice-based kernels.

For a locally nilpotent D with local slice r (D(r) = t != 0, D(t) = 0),
the Dixmier map

    pi_r(f) = sum_{i >= 0} (-1)^i / i!  *  D^i(f) * r^i / t^i

is a ring homomorphism B -> B_t whose image lies in the kernel of the
extension of D to B_t.  When r is a slice (t = 1) it projects B onto
Ker D, the kernel of pi_s is s*B, and B = (Ker D)[s]; applying pi_s to
the ring variables therefore yields kernel generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .derivations import Derivation, Inconclusive, apply, certify_lnd, nilpotency_index
from .rings import LocalizedElement, RingElement


class NotASlice(ValueError):
    pass


class NotLocalSlice(ValueError):
    pass


class UncertifiedDerivation(ValueError):
    pass


@dataclass
class SliceReport:
    derivation: Derivation
    slices_found: list[RingElement]
    local_slices_found: list[tuple[RingElement, RingElement]]
    search_space_description: str

    @property
    def has_slice(self) -> bool:
        return bool(self.slices_found)


def find_slices(D: Derivation, extra_candidates: list[RingElement] | None = None) -> SliceReport:
    """Scan a bounded template space for slices and local slices.

    Candidates: each ring variable, each caller-supplied element, and
    every {-1,0,1}-combination of the variables.  A miss means "none in
    the search space", never "no slice exists".
    """
    ring = D.ring
    candidates: list[RingElement] = [ring.var(v) for v in ring.variables]
    candidates.extend(extra_candidates or [])
    nvars = len(ring.variables)
    for coeffs in product((-1, 0, 1), repeat=nvars):
        if not any(coeffs):
            continue
        combo = ring.zero()
        for c, v in zip(coeffs, ring.variables):
            if c:
                combo = combo + c * ring.var(v)
        candidates.append(combo)

    slices: list[RingElement] = []
    local_slices: list[tuple[RingElement, RingElement]] = []
    seen: set = set()
    for r in candidates:
        if r in seen:
            continue
        seen.add(r)
        t = apply(D, r)
        if t == 1:
            slices.append(r)
        elif not t.is_zero() and apply(D, t).is_zero():
            local_slices.append((r, t))
    desc = (
        f"{nvars} ring variables, {len(extra_candidates or [])} extra candidates, "
        f"and all {{-1,0,1}}-combinations of the variables"
    )
    return SliceReport(D, slices, local_slices, desc)


def is_slice(D: Derivation, s: RingElement) -> bool:
    return apply(D, s) == 1


def _require_certified(D: Derivation, bound: int):
    cert = certify_lnd(D, bound)
    if not cert.certified:
        raise UncertifiedDerivation(
            f"{D.label} not certified locally nilpotent within bound {bound}"
        )


def dixmier_apply(
    D: Derivation, r: RingElement, f: RingElement, nilpotency_bound: int = 64
) -> LocalizedElement | RingElement:
    """Evaluate the Dixmier map pi_r at f, exactly.

    The sum terminates at the nilpotency index of f.  Requires (r, t) to
    be a local slice of a certified locally nilpotent D.  When t = 1 the
    result is demoted from B_t to a plain RingElement of B.
    """
    _require_certified(D, nilpotency_bound)
    t = apply(D, r)
    if t.is_zero():
        raise NotLocalSlice(f"D({r.to_str()}) = 0, not a local slice")
    if not apply(D, t).is_zero():
        raise NotLocalSlice(
            f"D({r.to_str()}) = {t.to_str()} is not in the kernel of {D.label}"
        )
    m = nilpotency_index(D, f, nilpotency_bound)
    if isinstance(m, Inconclusive):
        raise UncertifiedDerivation(
            f"nilpotency of {f.to_str()} not reached within {nilpotency_bound} steps"
        )
    n = m - 1  # highest i with D^i(f) possibly nonzero
    # pi_r(f) = [ sum_i (-1)^i/i! D^i(f) r^i t^(n-i) ] / t^n
    numerator = f.ring.zero()
    term = f
    fact = 1
    for i in range(0, n + 1):
        if i > 0:
            term = apply(D, term)
            fact *= i
        coeff = Fraction((-1) ** i, fact)
        numerator = numerator + coeff * term * r**i * t ** (n - i)
    out = LocalizedElement(t, numerator, n)
    if t == 1:
        return numerator
    return out


@dataclass
class KernelPresentation:
    derivation: Derivation
    generators: list[RingElement]
    via: str
    partial: bool = False


def _normalize_generators(gens: list[RingElement]) -> list[RingElement]:
    """Monic, deduplicated, sorted by the ring's term order (descending
    leading monomial); zeros and constants dropped."""
    out = []
    for g in gens:
        if g.is_zero() or g.repr.is_constant():
            continue
        ring = g.ring
        out.append(ring.element(g.repr.monic(ring.order)))
    uniq = list(dict.fromkeys(out))
    if not uniq:
        return []
    ring = uniq[0].ring
    n = len(ring.variables)
    uniq.sort(key=lambda e: ring.order.sort_key(e.repr.leading_monomial(ring.order), n))
    return uniq


def kernel_via_slice(D: Derivation, s: RingElement, nilpotency_bound: int = 64) -> KernelPresentation:
    """Kernel generators from the Slice Theorem: with slice s, the images
    pi_s(Xi) of the ring variables generate Ker D as a Q-algebra, and
    B = (Ker D)[s]."""
    _require_certified(D, nilpotency_bound)
    if not is_slice(D, s):
        raise NotASlice(f"D({s.to_str()}) != 1")
    gens = []
    for v in D.ring.variables:
        img = dixmier_apply(D, s, D.ring.var(v), nilpotency_bound)
        assert isinstance(img, RingElement)  # t = 1 demotes to B
        gens.append(img)
    return KernelPresentation(D, _normalize_generators(gens), via=f"slice({s.to_str()})")
