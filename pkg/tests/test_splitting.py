import random

import pytest
from hypothesis import given, settings

from conftest import corpus, polynomials, random_poly
from fsplit import Ideal, Ring
from fsplit.algebra import Grading, frobenius
from fsplit.splitting import (
    NotASplittingError,
    Splitting,
    apply,
    fedder_colon,
    fedder_criterion,
    graded_part,
    graded_witness,
    is_compatible,
    is_graded,
    is_splitting,
    monomial_splittings,
    semantic_compatible,
    standard_splitting,
    trace,
)
from oracles import pointwise_graded_part

R2 = Ring(2, "xy")
R3 = Ring(3, "xyz")
FINE = Ring(2, "xy", Grading.fine(2))


def test_trace_examples():
    assert trace(R2.parse("x*y")) == R2.one
    assert trace(R2.parse("x^3*y")) == R2.parse("x")
    assert trace(R2.parse("x^2*y")) == R2.zero
    S = Ring(3, "x")
    assert trace(S.parse("x^2 + x^5 + x")) == S.parse("1 + x")


def test_splitting_rejects_bad_premultiplier():
    assert not is_splitting(R2.parse("x^2"))
    with pytest.raises(NotASplittingError, match="not a splitting"):
        Splitting(R2.parse("x^2"))
    with pytest.raises(NotASplittingError):
        Splitting(R2.zero)


def test_standard_splitting_examples():
    phi = standard_splitting(R2)
    assert phi.premultiplier == R2.parse("x*y")
    assert apply(phi, "x^2") == R2.parse("x")
    assert apply(phi, "x*y") == R2.zero
    assert apply(phi, "x^2*y^2 + x^2") == R2.parse("x*y + x")
    assert apply(phi, 1) == R2.one


def test_standard_splitting_is_the_only_monomial_one():
    for ring in [R2, R3, Ring(5, "ab"), Ring(2, "abcd")]:
        assert monomial_splittings(ring) == [standard_splitting(ring).premultiplier]


@pytest.mark.parametrize("ring", [R2, R3, Ring(5, "ab")], ids=str)
def test_splitting_axioms(ring):
    rng = random.Random(11)
    phi = standard_splitting(ring)
    for _ in range(300):
        f, g = random_poly(ring, rng), random_poly(ring, rng)
        assert apply(phi, f + g) == apply(phi, f) + apply(phi, g)
        assert apply(phi, frobenius(f) * g) == f * apply(phi, g)
        assert apply(phi, frobenius(f)) == f


@settings(max_examples=100, deadline=None)
@given(polynomials(R2, terms=3, degree=2))
def test_non_monomial_splitting_axioms(f):
    phi = Splitting(R2.parse("x*y + x^2*y^3 + y^2"))
    assert apply(phi, frobenius(f)) == f


def test_is_graded_examples():
    assert is_graded(standard_splitting(R2), bound=6)
    # x*y + x^2 is homogeneous of degree 2, so graded for the standard grading
    assert is_graded(Splitting(R2.parse("x*y + x^2")), bound=6)
    phi = Splitting(FINE.parse("x*y + x^2"))
    assert not is_graded(phi, bound=6)
    r, image = graded_witness(phi, 6)
    assert image and r.is_monomial()
    assert not is_graded(Splitting(R2.parse("x*y + x^2*y^3")), bound=6)


def test_graded_part_examples():
    phi = Splitting(FINE.parse("x*y + x^2"))
    assert graded_part(phi).premultiplier == FINE.parse("x*y")
    assert is_graded(graded_part(phi), bound=6)
    psi = Splitting(R2.parse("x*y + x^2*y^3 + y^2"))
    assert graded_part(psi).premultiplier == R2.parse("x*y + y^2")
    # only the target-degree piece can contribute the constant of Tr(g),
    # so the graded part of a splitting is again a splitting
    rng = random.Random(2)
    g0 = standard_splitting(R2).premultiplier
    for _ in range(50):
        noise = random_poly(R2, rng, terms=4, degree=5)
        noise = noise - R2.poly({e: c for e, c in noise.items() if all(a % 2 for a in e)})
        assert graded_part(Splitting(g0 + noise)).premultiplier.degree() == 2


@pytest.mark.parametrize("ring, text", [
    (FINE, "x*y + x^2"), (R2, "x*y + x^2*y^3 + y^2"), (R2, "x*y + x^4*y^2 + x^3*y^2"),
    (Ring(3, "xy", Grading.fine(2)), "x^2*y^2 + x*y^2 + x^4*y^2"),
])
def test_graded_part_matches_pointwise_definition(ring, text):
    phi = Splitting(ring.parse(text))
    gp = graded_part(phi)
    rng = random.Random(5)
    for _ in range(200):
        r = random_poly(ring, rng, terms=5, degree=5)
        assert apply(gp, r) == pointwise_graded_part(phi, r)
    assert graded_part(gp) == gp


def test_is_compatible_examples():
    phi = standard_splitting(R2)
    assert is_compatible(phi, Ideal.parse(R2, ["x"])).verdict
    assert is_compatible(phi, Ideal.parse(R2, ["x*y"])).verdict
    assert is_compatible(phi, Ideal(R2)).verdict
    assert is_compatible(phi, Ideal.parse(R2, ["1"])).verdict
    cert = is_compatible(phi, Ideal.parse(R2, ["x + y"]))
    assert not cert
    assert cert.witness == R2.parse("x^2 + x*y")
    assert cert.image == R2.parse("x")
    assert not is_compatible(phi, Ideal.parse(R2, ["x", "y^2"])).verdict


def test_non_monomial_compatibility():
    # y^2 + x*y splits; it kills (y) only through the xy term
    phi = Splitting(R2.parse("x*y + y^2"))
    assert is_compatible(phi, Ideal.parse(R2, ["y"])).verdict
    cert = is_compatible(phi, Ideal.parse(R2, ["x"]))
    assert not cert and Ideal.parse(R2, ["x"]).contains(cert.witness)


@pytest.mark.parametrize("I", corpus(), ids=lambda I: f"p{I.ring.p}-{I.ring.nvars}{I.key}")
def test_criterion_agrees_with_semantic_check(I):
    ring = I.ring
    g = standard_splitting(ring).premultiplier
    # x^p has trace zero, so g + x^p is a second, non-monomial splitting
    for phi in [Splitting(g), Splitting(g + ring.var(0) ** ring.p)]:
        verdict = is_compatible(phi, I).verdict
        assert semantic_compatible(phi, I)[0] == verdict
        assert fedder_colon(phi, I).contains(phi.premultiplier) == verdict
        assert fedder_criterion(phi, I) == verdict


def test_semantic_witness_is_genuine():
    phi = standard_splitting(R3)
    I = Ideal.parse(R3, ["x*y - z^2"])
    ok, h = semantic_compatible(phi, I)
    assert not ok
    assert I.contains(h) and not I.contains(apply(phi, h))
