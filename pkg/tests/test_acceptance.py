"""End-to-end acceptance gate.

Each criterion is one test that prints a single PASS or FAIL line
(visible even under output capture) and asserts its runtime budget.
All arithmetic is exact, so every comparison is equality with zero
tolerance.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from lndkit import (
    Distinct,
    Inconclusive,
    Monomial,
    NotWellDefined,
    Polynomial,
    apply,
    certify_lnd,
    dixmier_apply,
    extend_with_new_variable,
    find_slices,
    intersect_spans,
    kernel_basis_bounded,
    kernel_via_slice,
    kernels_distinct_bounded,
    membership_in_span,
    ml_star_estimate_bounded,
    nilpotency_index,
    subalgebra_span_bounded,
)
from lndkit.cli import EXIT_FAIL, main
from lndkit.dixmier import _normalize_generators
from lndkit.fixtures import run_fixture
from lndkit.groebner import is_groebner_basis, normal_form
from lndkit.linalg import in_row_space
from lndkit.parser import parse_expression

from conftest import derivation_from, ring_from
from test_cli import CORPUS


@contextmanager
def criterion(n: int, budget_seconds: float, capsys):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\n[acceptance] criterion {n}: FAIL")
        raise
    elapsed = time.perf_counter() - t0
    with capsys.disabled():
        print(f"\n[acceptance] criterion {n}: PASS ({elapsed:.1f}s / {budget_seconds:.0f}s budget)")
    assert elapsed < budget_seconds


def gen_set(ring, *texts):
    return _normalize_generators(
        [ring.element(parse_expression(t, ring.variables)) for t in texts]
    )


def same_row_space(a, b) -> bool:
    return a.dimension == b.dimension and all(
        in_row_space(r, b.basis_vectors) for r in a.basis_vectors
    )


def test_criterion_1_surface_cylinder(surface_cylinder, capsys):
    with criterion(1, 5.0, capsys):
        ring, d1, d2 = surface_cylinder
        t = ring.var("T")
        for D in (d1, d2):
            cert = certify_lnd(D)
            assert cert.certified
            assert max(cert.per_generator_index.values()) <= 3
            assert t in find_slices(D).slices_found
        assert kernel_via_slice(d1, t).generators == gen_set(
            ring, "X", "Y - 2*Z*T + X*T^2", "Z - X*T"
        )
        assert kernel_via_slice(d2, t).generators == gen_set(
            ring, "Y", "X - 2*Z*T + Y*T^2", "Z - Y*T"
        )
        assert ml_star_estimate_bounded([(d1, t), (d2, t)], 3).is_trivial()


def test_criterion_2_threefold_kernels(threefold, capsys):
    with criterion(2, 30.0, capsys):
        ring, ds = threefold
        pair_texts = [("X", "Z"), ("X", "T"), ("Y", "Z"), ("Y", "T")]
        for D, pair in zip(ds, pair_texts):
            assert certify_lnd(D).certified
            span = kernel_basis_bounded(D, 3)
            expected = subalgebra_span_bounded(
                ring, [ring.var(v) for v in pair], 3
            )
            assert span.dimension == expected.dimension
            assert same_row_space(span, expected)
        meet = intersect_spans([kernel_basis_bounded(D, 4) for D in ds])
        assert meet.is_trivial()


def test_criterion_3_cylinder_extension(threefold, capsys):
    with criterion(3, 60.0, capsys):
        _, ds = threefold
        extended = [extend_with_new_variable(D, "U", 1) for D in ds]
        ring5 = extended[0][0]
        d5 = derivation_from(
            ring5, {"X": "0", "Y": "0", "Z": "0", "T": "0", "U": "1"}, "D5"
        )
        family = [ext for _, ext in extended] + [d5]
        expected_sets = [
            ("X", "Z", "Y - Z*U", "T - X*U"),
            ("X", "T", "Z - X*U", "Y - T*U"),
            ("Y", "Z", "X - Z*U", "T - Y*U"),
            ("Y", "T", "X - T*U", "Z - Y*U"),
            ("X", "Y", "Z", "T"),
        ]
        for ext, texts in zip(family, expected_sets):
            assert certify_lnd(ext).certified
            u = ext.ring.var("U")
            assert kernel_via_slice(ext, u).generators == gen_set(ext.ring, *texts)
        pair = intersect_spans(
            [kernel_basis_bounded(family[0], 2), kernel_basis_bounded(family[1], 2)]
        )
        shared = ring5.element(parse_expression("Z + T - X*U", ring5.variables))
        assert same_row_space(
            pair, subalgebra_span_bounded(ring5, [ring5.var("X"), shared], 2)
        )
        total = intersect_spans([kernel_basis_bounded(D, 3) for D in family])
        assert total.is_trivial()


def test_criterion_4_two_relation_fourfold(fourfold, capsys):
    with criterion(4, 60.0, capsys):
        ring, d1, d2 = fourfold
        assert len(ring.groebner) >= 2
        assert is_groebner_basis(list(ring.groebner), ring.order)
        t = ring.var("T")
        for D in (d1, d2):
            assert certify_lnd(D).certified
            assert t in find_slices(D).slices_found
        assert kernel_via_slice(d1, t).generators == gen_set(
            ring, "X", "Y", "Z", "U - Y*T", "V - X*T"
        )
        assert kernel_via_slice(d2, t).generators == gen_set(
            ring, "X", "Y", "Z", "2*U - Y*T^2", "2*V - X*T^2"
        )
        verdict = kernels_distinct_bounded(d1, d2, 3)
        assert isinstance(verdict, Distinct)
        w = verdict.witness
        assert apply(d1, w).is_zero() != apply(d2, w).is_zero()


def test_criterion_5_danielewski(danielewski, capsys):
    with criterion(5, 5.0, capsys):
        ring, D = danielewski
        assert certify_lnd(D).certified
        span = kernel_basis_bounded(D, 2)
        assert same_row_space(span, subalgebra_span_bounded(ring, [ring.var("X")], 2))


# -- criterion 6: randomized property suites --------------------------


def rand_poly(rng, variables, max_terms=3, max_degree=2):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = {}
        for _ in range(rng.randint(0, max_degree)):
            i = rng.randrange(len(variables))
            exps[i] = exps.get(i, 0) + 1
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if c:
            m = Monomial(exps)
            terms[m] = terms.get(m, Fraction(0)) + c
    return Polynomial(variables, {m: c for m, c in terms.items() if c})


N_CASES = 200


def test_criterion_6_property_suites(capsys):
    with criterion(6, 120.0, capsys):
        rng = random.Random(20260826)
        ring = ring_from("XYZT", "X*Y - Z^2 - 1")
        d = derivation_from(ring, {"X": "0", "Y": "2*Z", "Z": "X", "T": "1"})
        s = ring.var("T")
        relation = ring.relations[0]
        gb = list(ring.groebner)

        def elem(max_degree=2):
            return ring.element(rand_poly(rng, ring.variables, 3, max_degree))

        for _ in range(N_CASES):
            a, b = elem(), elem()
            alpha = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            assert apply(d, a * b) == a * apply(d, b) + b * apply(d, a)
            assert apply(d, alpha * a + b) == alpha * apply(d, a) + apply(d, b)

        for _ in range(N_CASES):
            p = rand_poly(rng, ring.variables, 3, 2)
            q = rand_poly(rng, ring.variables, 2, 1)
            assert apply(d, ring.element(p + q * relation)) == apply(d, ring.element(p))

        for _ in range(N_CASES):
            a, b = elem(), elem()
            pa, pb = dixmier_apply(d, s, a), dixmier_apply(d, s, b)
            assert dixmier_apply(d, s, a + b) == pa + pb
            assert dixmier_apply(d, s, a * b) == pa * pb
            assert apply(d, pa).is_zero()
            assert dixmier_apply(d, s, s * a) == ring.zero()

        for _ in range(N_CASES):
            p = rand_poly(rng, ring.variables, 3, 2)
            q = rand_poly(rng, ring.variables, 3, 2)
            cof = rand_poly(rng, ring.variables, 2, 1)
            nf = lambda f: normal_form(f, gb, ring.order)
            assert nf(p + q) == nf(p) + nf(q)
            assert nf(cof * relation).is_zero()

        for _ in range(N_CASES):
            gens_a = [elem(1) for _ in range(2)]
            gens_b = [elem(1) for _ in range(2)]
            small = subalgebra_span_bounded(ring, gens_a, 1)
            large = subalgebra_span_bounded(ring, gens_a, 2)
            for e in small.decode():
                assert membership_in_span(e, large)
            sa = subalgebra_span_bounded(ring, gens_a, 2)
            sb = subalgebra_span_bounded(ring, gens_b, 2)
            meet = intersect_spans([sa, sb])
            for row in meet.basis_vectors:
                assert in_row_space(row, sa.basis_vectors)
                assert in_row_space(row, sb.basis_vectors)

        for _ in range(N_CASES):
            p = rand_poly(rng, ring.variables, 4, 3)
            text = p.to_str(ring.order)
            assert parse_expression(text, ring.variables) == p


def test_criterion_7_negative_controls(tmp_path, capsys):
    with criterion(7, 30.0, capsys):
        ring = ring_from("XYZT", "X*Y - Z^2 - 1")
        with pytest.raises(NotWellDefined) as info:
            derivation_from(ring, {"X": "1", "Y": "0", "Z": "0", "T": "0"})
        assert not info.value.residue.is_zero()

        line = ring_from("X")
        euler = derivation_from(line, {"X": "X"})
        assert nilpotency_index(euler, line.var("X"), 50) == Inconclusive(50)
        cert = certify_lnd(euler, 50)
        assert not cert.certified
        assert cert.per_generator_index["X"] == Inconclusive(50)

        text = CORPUS["quadric_surface_cylinder.toml"].read_text()
        corrupted = text.replace('"Z - X*T"', '"Z - 2*X*T"')
        assert corrupted != text
        bad = tmp_path / "corrupted.toml"
        bad.write_text(corrupted)
        report = run_fixture(bad)
        failing = [c for c in report.claims if c.status == "fail"]
        assert failing and failing[0].witness
        assert main(["verify", str(bad)]) == EXIT_FAIL
