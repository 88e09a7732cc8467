"""Shared rings, derivations, and hypothesis strategies."""

import pytest
from hypothesis import strategies as st

from lndkit import Derivation, Monomial, Polynomial, RingPresentation, TermOrder
from lndkit.parser import parse_expression


def ring_from(variables, *relation_texts, order="grevlex"):
    variables = tuple(variables)
    rels = [parse_expression(t, variables) for t in relation_texts]
    return RingPresentation(variables, rels, TermOrder(order))


def derivation_from(ring, images, label="D"):
    imgs = {
        v: ring.element(parse_expression(e, ring.variables))
        for v, e in images.items()
    }
    return Derivation(ring, imgs, label)


# -- the worked corpus rings, built once per session ------------------


@pytest.fixture(scope="session")
def surface_cylinder():
    """Q[X,Y,Z,T]/(XY - Z^2 - 1) with two slice-T derivations."""
    ring = ring_from("XYZT", "X*Y - Z^2 - 1")
    d1 = derivation_from(ring, {"X": "0", "Y": "2*Z", "Z": "X", "T": "1"}, "D1")
    d2 = derivation_from(ring, {"X": "2*Z", "Y": "0", "Z": "Y", "T": "1"}, "D2")
    return ring, d1, d2


@pytest.fixture(scope="session")
def threefold():
    """Q[X,Y,Z,T]/(XY - ZT - 1) with four kernel-type derivations."""
    ring = ring_from("XYZT", "X*Y - Z*T - 1")
    ds = [
        derivation_from(ring, {"X": "0", "Y": "Z", "Z": "0", "T": "X"}, "D1"),
        derivation_from(ring, {"X": "0", "Y": "T", "Z": "X", "T": "0"}, "D2"),
        derivation_from(ring, {"X": "Z", "Y": "0", "Z": "0", "T": "Y"}, "D3"),
        derivation_from(ring, {"X": "T", "Y": "0", "Z": "Y", "T": "0"}, "D4"),
    ]
    return ring, ds


@pytest.fixture(scope="session")
def fourfold():
    """Six-variable ring with two relations and two slice-T derivations."""
    ring = ring_from(("X", "Y", "Z", "U", "V", "T"),
                     "X^2 + Y^3 + Z^7", "X*U - Y*V - 1")
    zero = {"X": "0", "Y": "0", "Z": "0"}
    d1 = derivation_from(ring, {**zero, "U": "Y", "V": "X", "T": "1"}, "d1")
    d2 = derivation_from(ring, {**zero, "U": "Y*T", "V": "X*T", "T": "1"}, "d2")
    return ring, d1, d2


@pytest.fixture(scope="session")
def danielewski():
    ring = ring_from("XYZ", "X^2*Z - Y^2")
    d = derivation_from(ring, {"X": "0", "Y": "X^2", "Z": "2*Y"}, "D")
    return ring, d


# -- hypothesis strategies --------------------------------------------

coefficients = st.fractions(
    min_value=-4, max_value=4, max_denominator=3
).filter(lambda c: c != 0)


def monomials(nvars: int, max_degree: int = 3):
    # a degree-<=max monomial as a multiset of variable picks (no filtering)
    def build(picks):
        exps = {}
        for i in picks:
            exps[i] = exps.get(i, 0) + 1
        return Monomial(exps)

    return st.lists(
        st.integers(min_value=0, max_value=nvars - 1), min_size=0, max_size=max_degree
    ).map(build)


def polynomials(variables, max_terms: int = 3, max_degree: int = 3):
    variables = tuple(variables)

    def build(pairs):
        return Polynomial(variables, {m: c for m, c in pairs})

    return st.lists(
        st.tuples(monomials(len(variables), max_degree), coefficients),
        min_size=0,
        max_size=max_terms,
    ).map(build)


def elements_of(ring, max_terms: int = 3, max_degree: int = 3):
    return polynomials(ring.variables, max_terms, max_degree).map(ring.element)
