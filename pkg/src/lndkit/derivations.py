"""Derivations on finitely presented rings, given by generator images.

A map D is specified by its values on the ring variables and extended by
the Leibniz rule.  Construction verifies well-definedness: for each
relation f, the expansion sum_i (df/dXi) * D(Xi) must reduce to zero
modulo the ideal, otherwise D does not descend to the quotient.

Local nilpotency is certified by iterating D on each generator; in
characteristic zero, nilpotency on generators of a finitely generated
algebra implies local nilpotency.  Exceeding the iteration bound yields
an `Inconclusive` value, never a claim that D fails to be locally
nilpotent (no general termination criterion exists).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Monomial, Polynomial
from .rings import RingElement, RingPresentation

DEFAULT_NILPOTENCY_BOUND = 64


class NotWellDefined(ValueError):
    """The candidate images do not define a derivation on the quotient."""

    def __init__(self, relation: Polynomial, residue: RingElement):
        self.relation = relation
        self.residue = residue
        super().__init__(
            f"images do not preserve the ideal: relation {relation.to_str()} "
            f"maps to nonzero residue {residue.to_str()}"
        )


@dataclass(frozen=True)
class Inconclusive:
    """Iteration bound reached without hitting zero."""

    bound: int


class Derivation:
    """A derivation of B, defined by one image per ring variable."""

    def __init__(self, ring: RingPresentation, images: dict[str, RingElement], label: str = "D"):
        missing = set(ring.variables) - set(images)
        if missing:
            raise ValueError(f"missing image for variable(s) {sorted(missing)}")
        extra = set(images) - set(ring.variables)
        if extra:
            raise ValueError(f"image given for unknown variable(s) {sorted(extra)}")
        for v, img in images.items():
            if img.ring != ring:
                raise ValueError(f"image of {v} lives in a different ring")
        self.ring = ring
        self.images = {v: images[v] for v in ring.variables}
        self.label = label
        self._cert_cache: dict[int, "NilpotencyCertificate"] = {}
        self._check_well_defined()

    def _check_well_defined(self):
        for f in self.ring.relations:
            img = self._apply_poly(f)
            if not img.is_zero():
                raise NotWellDefined(f, img)

    def _apply_poly(self, p: Polynomial) -> RingElement:
        """Leibniz extension: D(p) = sum_i (dp/dXi) * D(Xi), reduced."""
        total = self.ring.zero()
        for i, v in enumerate(self.ring.variables):
            dp = p.partial(i)
            if dp.is_zero():
                continue
            total = total + self.ring.element(dp) * self.images[v]
        return total

    def __call__(self, f: RingElement, times: int = 1) -> RingElement:
        return apply(self, f, times)

    def __repr__(self):
        imgs = ", ".join(f"{v} -> {e.to_str()}" for v, e in self.images.items())
        return f"Derivation({self.label}: {imgs})"


def make_derivation(ring: RingPresentation, images: dict[str, RingElement], label: str = "D") -> Derivation:
    return Derivation(ring, images, label)


def apply(D: Derivation, f: RingElement, times: int = 1) -> RingElement:
    """D^times applied to f (each step reduced to normal form)."""
    if f.ring != D.ring:
        raise ValueError("element does not belong to the derivation's ring")
    if times < 1:
        raise ValueError("times must be >= 1")
    out = f
    for _ in range(times):
        out = D._apply_poly(out.repr)
    return out


def nilpotency_index(D: Derivation, f: RingElement, bound: int = DEFAULT_NILPOTENCY_BOUND):
    """Least m <= bound with D^m(f) = 0, else Inconclusive(bound).

    Kernel elements (including 0 and constants) have index 1.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    cur = f
    for m in range(1, bound + 1):
        cur = apply(D, cur)
        if cur.is_zero():
            return m
    return Inconclusive(bound)


@dataclass(frozen=True)
class NilpotencyCertificate:
    """Outcome of the generator-by-generator nilpotency check."""

    derivation: Derivation
    per_generator_index: dict[str, int | Inconclusive]
    global_bound_hint: int
    certified: bool

    @property
    def status(self) -> str:
        if self.certified:
            return "certified"
        bound = max(
            (v.bound for v in self.per_generator_index.values() if isinstance(v, Inconclusive)),
            default=0,
        )
        return f"inconclusive(bound={bound})"


def certify_lnd(D: Derivation, bound: int = DEFAULT_NILPOTENCY_BOUND) -> NilpotencyCertificate:
    """Certify local nilpotency by iterating D on every ring variable.

    In characteristic zero, if every generator of a finitely generated
    algebra is annihilated by some power of D, then D is locally
    nilpotent; the certificate records the per-generator indices.  The
    hint is the largest generator index, a bound for degree-one elements.
    """
    if bound in D._cert_cache:
        return D._cert_cache[bound]
    indices: dict[str, int | Inconclusive] = {}
    for v in D.ring.variables:
        indices[v] = nilpotency_index(D, D.ring.var(v), bound)
    certified = all(isinstance(m, int) for m in indices.values())
    hint = max((m for m in indices.values() if isinstance(m, int)), default=1)
    cert = NilpotencyCertificate(D, indices, hint, certified)
    D._cert_cache[bound] = cert
    return cert


def extend_with_new_variable(
    D: Derivation, new_var_name: str, image_of_new_var=1, label: str | None = None
) -> tuple[RingPresentation, Derivation]:
    """Extend D from B to B[new_var] with a prescribed image of the new
    variable (default 1, which gives the extension a slice by
    construction).

    `image_of_new_var` may be a RingElement of B, a RingElement of the
    extended ring, or an int/Fraction constant.
    """
    if new_var_name in D.ring.variables:
        raise ValueError(f"variable name {new_var_name!r} already used in the ring")
    old = D.ring
    variables = old.variables + (new_var_name,)
    lift = _context_lift(old.variables, variables)
    relations = [lift(f) for f in old.relations]
    new_ring = RingPresentation(variables, relations, old.order)

    def to_new(e) -> RingElement:
        if isinstance(e, RingElement):
            if e.ring == new_ring:
                return e
            if e.ring == old:
                return new_ring.element(lift(e.repr))
            raise ValueError("image belongs to an unrelated ring")
        if isinstance(e, (int, Fraction)):
            return new_ring.element(Polynomial.constant(variables, e))
        raise TypeError(f"cannot interpret image of type {type(e).__name__}")

    images = {v: to_new(img) for v, img in D.images.items()}
    images[new_var_name] = to_new(image_of_new_var)
    return new_ring, Derivation(new_ring, images, label or f"{D.label}~")


def _context_lift(old_vars: tuple[str, ...], new_vars: tuple[str, ...]):
    """Reindex polynomials from a sub-context into an extended context."""
    index_map = {i: new_vars.index(v) for i, v in enumerate(old_vars)}

    def lift(p: Polynomial) -> Polynomial:
        terms = {}
        for m, c in p.terms.items():
            terms[Monomial({index_map[i]: e for i, e in m.exponents.items()})] = c
        return Polynomial(new_vars, terms)

    return lift
