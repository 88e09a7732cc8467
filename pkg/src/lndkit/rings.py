"""Finitely presented rings B = Q[X1..Xn]/(f1..fm) and their elements.

Elements are stored as normal forms against the presentation's reduced
Groebner basis, so equality of elements is equality of representatives.
A minimal localization B_t (denominators = powers of one element t) is
provided as the codomain of Dixmier maps; equality there is by
cross-multiplication, which is honest equality whenever t is not a
zero-divisor.  Everything is valid over any extension field of
characteristic zero, since all data is rational.
"""

from __future__ import annotations

from fractions import Fraction

from .groebner import groebner_basis, normal_form
from .poly import Polynomial, TermOrder


class PresentationError(ValueError):
    """Raised for invalid ring presentations (zero ring, bad variables)."""


class RingPresentation:
    """Variables, relations, a term order, and the cached Groebner basis."""

    def __init__(self, variables, relations, order: TermOrder | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise PresentationError(f"duplicate variable in {variables}")
        self.variables = variables
        self.order = order or TermOrder("grevlex")
        relations = tuple(relations)
        for f in relations:
            if f.vars != variables:
                raise PresentationError(
                    f"relation {f!r} not in the declared variable context {variables}"
                )
            if f.is_zero():
                raise PresentationError("zero relation is not allowed")
        self.relations = relations
        self.groebner = tuple(groebner_basis(list(relations), self.order))
        for g in self.groebner:
            if g.is_constant():
                raise PresentationError(
                    "relations generate the unit ideal: the presented ring is zero"
                )

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, list(self.groebner), self.order)

    def element(self, p: Polynomial) -> "RingElement":
        return RingElement(self, p)

    def zero(self) -> "RingElement":
        return RingElement(self, Polynomial.zero(self.variables))

    def one(self) -> "RingElement":
        return RingElement(self, Polynomial.constant(self.variables, 1))

    def var(self, name: str) -> "RingElement":
        return RingElement(self, Polynomial.variable(self.variables, name))

    def __eq__(self, other):
        return (
            isinstance(other, RingPresentation)
            and self.variables == other.variables
            and self.relations == other.relations
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variables, self.relations, self.order))

    def __repr__(self):
        rels = ", ".join(f.to_str(self.order) for f in self.relations)
        return f"RingPresentation(Q[{', '.join(self.variables)}] / ({rels}))"


class RingElement:
    """An element of B, stored as its reduced normal-form representative."""

    __slots__ = ("ring", "repr")

    def __init__(self, ring: RingPresentation, p: Polynomial):
        if p.vars != ring.variables:
            raise ValueError("polynomial context does not match the ring")
        self.ring = ring
        self.repr = ring.reduce(p)

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError("elements of different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return RingElement(self.ring, Polynomial.constant(self.ring.variables, other))
        raise TypeError(f"cannot combine RingElement with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return RingElement(self.ring, self.repr + other.repr)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, -self.repr)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        other = self._coerce(other)
        return RingElement(self.ring, self.repr * other.repr)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("power requires a non-negative integer")
        return RingElement(self.ring, self.repr**n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.repr == other.repr

    def __hash__(self):
        return hash((self.ring, self.repr))

    def is_zero(self) -> bool:
        return self.repr.is_zero()

    @property
    def degree(self) -> int:
        """Total degree of the normal-form representative."""
        return self.repr.total_degree

    def to_str(self) -> str:
        return self.repr.to_str(self.ring.order)

    def __repr__(self):
        return f"<{self.to_str()}>"


def make_ring(variables, relation_polys, order: TermOrder | None = None) -> RingPresentation:
    return RingPresentation(variables, relation_polys, order)


class LocalizedElement:
    """numerator / t**exponent in B_t, with cross-multiplication equality.

    No cancellation is attempted: divisibility in a quotient ring is
    nontrivial, and exponents stay small at this package's scale.
    Equality is genuine equality in B_t when t is not a zero-divisor.
    """

    __slots__ = ("ring", "t", "numerator", "exponent")

    def __init__(self, t: RingElement, numerator: RingElement, exponent: int = 0):
        if t.is_zero():
            raise ValueError("cannot localize at zero")
        if numerator.ring != t.ring:
            raise ValueError("numerator and t live in different rings")
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        self.ring = t.ring
        self.t = t
        self.numerator = numerator
        self.exponent = exponent

    def _check(self, other: "LocalizedElement"):
        if not isinstance(other, LocalizedElement):
            raise TypeError("expected a LocalizedElement")
        if other.ring != self.ring or other.t != self.t:
            raise ValueError("localized elements over different rings or denominators")

    def __add__(self, other):
        self._check(other)
        k = max(self.exponent, other.exponent)
        num = (
            self.numerator * self.t ** (k - self.exponent)
            + other.numerator * self.t ** (k - other.exponent)
        )
        return LocalizedElement(self.t, num, k)

    def __neg__(self):
        return LocalizedElement(self.t, -self.numerator, self.exponent)

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LocalizedElement(self.t, self.numerator * other, self.exponent)
        self._check(other)
        return LocalizedElement(
            self.t, self.numerator * other.numerator, self.exponent + other.exponent
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, RingElement)):
            other = LocalizedElement(self.t, self.numerator._coerce(other), 0)
        if not isinstance(other, LocalizedElement):
            return NotImplemented
        self._check(other)
        return (
            self.numerator * other.t**other.exponent
            == other.numerator * self.t**self.exponent
        )

    def __hash__(self):
        raise TypeError("LocalizedElement is unhashable (equality is not structural)")

    def is_integral(self) -> RingElement | None:
        """Return the B-element this fraction equals, if the denominator
        is trivial (exponent 0); otherwise None."""
        if self.exponent == 0:
            return self.numerator
        return None

    def __repr__(self):
        den = "" if self.exponent == 0 else f" / ({self.t.to_str()})^{self.exponent}"
        return f"<({self.numerator.to_str()}){den}>"


def embed(b: RingElement, t: RingElement) -> LocalizedElement:
    """The canonical map B -> B_t, b |-> b / t^0."""
    return LocalizedElement(t, b, 0)
