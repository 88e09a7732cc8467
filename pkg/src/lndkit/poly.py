"""Sparse multivariate polynomials with exact rational coefficients.

All coefficients are `fractions.Fraction`; there is no floating point
anywhere in this package.  A polynomial carries its variable context (an
ordered tuple of names) and two polynomials interoperate only when their
contexts are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class ContextMismatchError(ValueError):
    """Raised when two polynomials with different variable contexts meet."""


class Monomial:
    """A power product, stored sparsely as (variable_index, exponent) pairs.

    Zero exponents are never stored, so equal monomials compare equal
    structurally.  Immutable and hashable.
    """

    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        exps = []
        for idx, e in items:
            if e < 0:
                raise ValueError(f"negative exponent {e} for variable index {idx}")
            if e > 0:
                exps.append((idx, e))
        exps.sort()
        self._exps = tuple(exps)
        self._hash = hash(self._exps)

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self._exps)

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self._exps)

    def exponent(self, idx: int) -> int:
        for i, e in self._exps:
            if i == idx:
                return e
        return 0

    def dense(self, nvars: int) -> tuple[int, ...]:
        out = [0] * nvars
        for i, e in self._exps:
            out[i] = e
        return tuple(out)

    def __mul__(self, other: "Monomial") -> "Monomial":
        exps = dict(self._exps)
        for i, e in other._exps:
            exps[i] = exps.get(i, 0) + e
        return Monomial(exps)

    def divides(self, other: "Monomial") -> bool:
        oth = other.exponents
        return all(oth.get(i, 0) >= e for i, e in self._exps)

    def divide(self, other: "Monomial") -> "Monomial":
        """self / other; raises if the quotient is not a monomial."""
        exps = dict(self._exps)
        for i, e in other._exps:
            exps[i] = exps.get(i, 0) - e
            if exps[i] < 0:
                raise ValueError("monomial division with negative result")
        return Monomial(exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        exps = dict(self._exps)
        for i, e in other._exps:
            exps[i] = max(exps.get(i, 0), e)
        return Monomial(exps)

    def is_one(self) -> bool:
        return not self._exps

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self._exps:
            return "Monomial(1)"
        return "Monomial(" + " ".join(f"x{i}^{e}" for i, e in self._exps) + ")"


MONOMIAL_ONE = Monomial()


@dataclass(frozen=True)
class TermOrder:
    """A monomial order: 'lex' or 'grevlex' with a variable priority.

    `priority` is a permutation of variable indices, highest first; None
    means the declared variable order.  Both orders are multiplicative
    total orders with 1 minimal.
    """

    kind: str = "grevlex"
    priority: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown term order kind: {self.kind!r}")

    def sort_key(self, m: Monomial, nvars: int):
        """Key such that larger monomials get larger keys."""
        dense = m.dense(nvars)
        if self.priority is not None:
            dense = tuple(dense[i] for i in self.priority)
        if self.kind == "lex":
            return dense
        # grevlex: by total degree, ties broken by smallest last exponent
        return (sum(dense), tuple(-e for e in reversed(dense)))

    def compare(self, a: Monomial, b: Monomial, nvars: int) -> int:
        ka, kb = self.sort_key(a, nvars), self.sort_key(b, nvars)
        return (ka > kb) - (ka < kb)


def _as_fraction(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class Polynomial:
    """Canonical sparse polynomial: a map monomial -> nonzero Fraction.

    Equality is structural; zero coefficients are never stored, so two
    polynomials are equal iff they are the same element of Q[vars].
    """

    __slots__ = ("vars", "_terms")

    def __init__(self, variables: tuple[str, ...], terms: Mapping[Monomial, Scalar] = ()):
        self.vars = tuple(variables)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for m, c in items:
            c = _as_fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables: tuple[str, ...]) -> "Polynomial":
        return cls(variables)

    @classmethod
    def constant(cls, variables: tuple[str, ...], c: Scalar) -> "Polynomial":
        return cls(variables, {MONOMIAL_ONE: _as_fraction(c)})

    @classmethod
    def variable(cls, variables: tuple[str, ...], name: str) -> "Polynomial":
        try:
            idx = variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} in context {variables}") from None
        return cls(variables, {Monomial({idx: 1}): Fraction(1)})

    # -- structure ----------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m.is_one() for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self._terms.get(MONOMIAL_ONE, Fraction(0))

    @property
    def total_degree(self) -> int:
        """Total degree; 0 for the zero polynomial by convention."""
        if not self._terms:
            return 0
        return max(m.total_degree for m in self._terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def _check_context(self, other: "Polynomial"):
        if self.vars != other.vars:
            raise ContextMismatchError(
                f"variable contexts differ: {self.vars} vs {other.vars}"
            )

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.vars, other)
        self._check_context(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Polynomial(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return Polynomial(self.vars, {m: c * v for m, v in self._terms.items()})
        self._check_context(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power requires a non-negative integer")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self):
        return hash((self.vars, frozenset(self._terms.items())))

    # -- calculus -----------------------------------------------------

    def partial(self, var: str | int) -> "Polynomial":
        """Formal partial derivative with respect to one variable."""
        idx = self.vars.index(var) if isinstance(var, str) else var
        terms: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            e = m.exponent(idx)
            if e == 0:
                continue
            exps = m.exponents
            exps[idx] = e - 1
            dm = Monomial(exps)
            terms[dm] = terms.get(dm, Fraction(0)) + c * e
        return Polynomial(self.vars, terms)

    # -- order-dependent views ---------------------------------------

    def sorted_terms(self, order: TermOrder) -> list[tuple[Monomial, Fraction]]:
        n = len(self.vars)
        return sorted(
            self._terms.items(),
            key=lambda mc: order.sort_key(mc[0], n),
            reverse=True,
        )

    def leading_monomial(self, order: TermOrder) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        n = len(self.vars)
        return max(self._terms, key=lambda m: order.sort_key(m, n))

    def leading_coefficient(self, order: TermOrder) -> Fraction:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: TermOrder) -> "Polynomial":
        if not self._terms:
            return self
        return self * (1 / self.leading_coefficient(order))

    # -- printing -----------------------------------------------------

    def _format_monomial(self, m: Monomial) -> str:
        parts = []
        for i, e in sorted(m.exponents.items()):
            parts.append(self.vars[i] if e == 1 else f"{self.vars[i]}^{e}")
        return "*".join(parts)

    def to_str(self, order: TermOrder | None = None) -> str:
        """Canonical ASCII rendering, terms in descending order."""
        if not self._terms:
            return "0"
        order = order or TermOrder("grevlex")
        pieces = []
        for k, (m, c) in enumerate(self.sorted_terms(order)):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = self._format_monomial(m)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self):
        return f"Polynomial({self.to_str()})"
