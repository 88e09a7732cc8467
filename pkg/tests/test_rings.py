import pytest
from hypothesis import given, settings

from lndkit import LocalizedElement, PresentationError, RingPresentation, embed
from lndkit.parser import parse_expression

from conftest import polynomials, ring_from


class TestMakeRing:
    def test_valid_presentation(self):
        ring = ring_from("XYZT", "X*Y - Z^2 - 1")
        assert ring.variables == ("X", "Y", "Z", "T")
        assert len(ring.groebner) == 1

    def test_free_ring(self):
        ring = ring_from("X")
        assert ring.groebner == ()
        assert ring.var("X") ** 2 == ring.element(parse_expression("X^2", ("X",)))

    def test_zero_ring_rejected(self):
        with pytest.raises(PresentationError, match="zero"):
            ring_from("X", "1")

    def test_unit_ideal_rejected(self):
        # relations that only jointly generate 1
        with pytest.raises(PresentationError):
            ring_from("X", "X", "X - 1")

    def test_duplicate_variable_rejected(self):
        with pytest.raises(PresentationError, match="duplicate"):
            RingPresentation(("X", "X"), [])

    def test_relation_in_wrong_context_rejected(self):
        wrong = parse_expression("W", ("W",))
        with pytest.raises(PresentationError):
            RingPresentation(("X",), [wrong])

    def test_zero_relation_rejected(self):
        zero = parse_expression("0", ("X",))
        with pytest.raises(PresentationError):
            RingPresentation(("X",), [zero])


class TestQuotientElements:
    def test_relation_collapses(self):
        ring = ring_from("XYZT", "X*Y - Z^2 - 1")
        x, y, z = ring.var("X"), ring.var("Y"), ring.var("Z")
        assert x * y == z**2 + 1

    def test_stored_reduced(self):
        ring = ring_from("XYZT", "X*Y - Z*T - 1")
        e = ring.element(parse_expression("X^2*Y", ring.variables))
        assert e.to_str() == "X*Z*T + X"

    @given(f=polynomials("XYZT"), g=polynomials("XYZT"))
    @settings(max_examples=100)
    def test_element_arith_matches_polynomial_arith(self, f, g):
        ring = ring_from("XYZT", "X*Y - Z^2 - 1")
        assert ring.element(f) + ring.element(g) == ring.element(f + g)
        assert ring.element(f) * ring.element(g) == ring.element(f * g)


class TestLocalized:
    def setup_method(self):
        self.ring = ring_from("XYZT", "X*Y - Z*T - 1")
        self.x = self.ring.var("X")
        self.z = self.ring.var("Z")

    def test_additive_identity(self):
        a = LocalizedElement(self.x, self.z, 1)
        zero = LocalizedElement(self.x, self.ring.zero(), 0)
        assert a + zero == a

    def test_cross_multiplication_equality(self):
        assert LocalizedElement(self.x, self.x * self.z, 1) == LocalizedElement(
            self.x, self.z, 0
        )

    def test_multiplication(self):
        a = LocalizedElement(self.x, self.z, 1)
        assert a * a == LocalizedElement(self.x, self.z**2, 2)

    def test_mismatched_denominator_rejected(self):
        a = LocalizedElement(self.x, self.z, 1)
        b = LocalizedElement(self.z, self.x, 1)
        with pytest.raises(ValueError):
            a + b

    def test_zero_denominator_rejected(self):
        with pytest.raises(ValueError):
            LocalizedElement(self.ring.zero(), self.z, 0)


@given(f=polynomials("XYZT", max_degree=2), g=polynomials("XYZT", max_degree=2))
@settings(max_examples=100)
def test_embedding_is_a_ring_homomorphism(f, g):
    ring = ring_from("XYZT", "X*Y - Z*T - 1")
    t = ring.var("X")
    a, b = ring.element(f), ring.element(g)
    assert embed(a, t) + embed(b, t) == embed(a + b, t)
    assert embed(a, t) * embed(b, t) == embed(a * b, t)
    assert embed(ring.one(), t) == 1
