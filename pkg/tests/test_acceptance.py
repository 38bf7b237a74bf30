"""The nine acceptance criteria, each timed against its runtime limit."""

import random

from conftest import corpus, random_poly
from fsplit import Ideal, Ring
from fsplit.algebra import Grading, frobenius, graded_piece_basis
from fsplit.ideal import ideal_intersection, ideal_sum
from fsplit.lattice import brute_force_toric, enumerate_closure
from fsplit.rigidity import phi_membership, rigidity_report
from fsplit.splitting import (
    Splitting,
    apply,
    fedder_colon,
    graded_part,
    is_compatible,
    is_graded,
    semantic_compatible,
    standard_splitting,
)
from oracles import down_closed_families, pointwise_graded_part, span_member


def test_criterion_1_splitting_axioms(criterion):
    cases = []
    for ring in [Ring(2, "xy"), Ring(3, "xyz"), Ring(5, "ab")]:
        cases.append(standard_splitting(ring))
    R = Ring(2, "xy")
    cases.append(Splitting(R.parse("x*y + x^2*y^3 + y^2")))
    rng = random.Random(2024)
    for phi in cases:
        ring = phi.ring
        assert apply(phi, ring.one) == ring.one
        for _ in range(1000):
            a, b = random_poly(ring, rng, terms=3, degree=2), random_poly(ring, rng, terms=3)
            assert apply(phi, a + b) == apply(phi, a) + apply(phi, b)
            assert apply(phi, frobenius(a) * b) == a * apply(phi, b)
    assert criterion.elapsed() < 10


def test_criterion_2_graded_part(criterion):
    ring = Ring(2, "xy", Grading.fine(2))
    phi = Splitting(ring.parse("x*y + x^2"))
    assert not is_graded(phi, bound=10)
    gp = graded_part(phi)
    assert is_graded(gp, bound=10)
    for k in range(11):
        for e in graded_piece_basis(ring, k):
            m = ring.monomial(e)
            assert apply(gp, m) == pointwise_graded_part(phi, m)
    assert criterion.elapsed() < 5


def test_criterion_3_compatibility_cross_check(criterion):
    ideals = corpus()
    assert len(ideals) >= 30
    for I in ideals:
        phi = standard_splitting(I.ring)
        colon = fedder_colon(phi, I).contains(phi.premultiplier)
        semantic, _ = semantic_compatible(phi, I)
        assert colon == semantic == is_compatible(phi, I).verdict
    assert criterion.elapsed() < 60


def _lattices():
    for p in (2, 3):
        for n in (1, 2, 3):
            R = Ring(p, "xyz"[:n])
            yield standard_splitting(R), brute_force_toric(standard_splitting(R))


def test_criterion_4_closure_laws(criterion):
    for phi, L in _lattices():
        members = set(L.members)
        for I in L.members:
            for J in L.members:
                for K in (ideal_sum(I, J), ideal_intersection(I, J)):
                    assert K in members
                    assert is_compatible(phi, K).verdict
    assert criterion.elapsed() < 60


def test_criterion_5_finiteness(criterion):
    for I in corpus():
        phi = standard_splitting(I.ring)
        if is_compatible(phi, I).verdict:
            L = enumerate_closure([I], phi)
            assert len(L) < 20 and not L.partial
    counts = {}
    for phi, L in _lattices():
        n = phi.ring.nvars
        assert L.anomalies == []
        for I in L.members:
            assert I.is_zero() or I.is_unit() or I.is_squarefree_monomial()
        counts.setdefault(n, set()).add(len(L))
    assert counts == {1: {3}, 2: {6}, 3: {20}}
    assert [down_closed_families(n) for n in (1, 2, 3)] == [3, 6, 20]
    assert criterion.elapsed() < 120


def test_criterion_6_rigidity(criterion):
    positive = 0
    checked = 0
    for phi, L in _lattices():
        for I in L.without_trivial():
            r = rigidity_report(I, phi)
            assert r.dim_intertwined == 0, I
            positive += r.dim_hom > 0
            checked += 1
    R = Ring(2, "xy")
    r = rigidity_report(Ideal.parse(R, ["x"]), standard_splitting(R))
    assert (r.dim_hom, r.dim_intertwined) == (1, 0)
    assert positive > 0 and checked == 2 * (1 + 4 + 18)
    assert criterion.elapsed() < 120


def test_criterion_7_multigraded_rigidity(criterion):
    for phi, L in _lattices():
        assert phi.premultiplier.is_monomial()
        for I in L.members:
            assert I.is_monomial() or I.is_zero()
        top = phi.ring.monomial((1,) * phi.ring.nvars)
        closure = enumerate_closure([Ideal(phi.ring, [top])], phi)
        assert all(I.is_monomial() for I in closure)
    R = Ring(2, "xy")
    I = Ideal.parse(R, ["x + y"])
    cert = is_compatible(standard_splitting(R), I)
    assert not cert.verdict
    assert I.contains(cert.witness) and not I.contains(cert.image)
    assert criterion.elapsed() < 10


def test_criterion_8_phi_membership(criterion):
    for I in corpus():
        phi = standard_splitting(I.ring)
        if is_compatible(phi, I).verdict:
            p = I.ring.p
            assert all(phi_membership(I, phi, N) for N in range(2 * p + 1)), I
    R = Ring(2, "xy")
    assert not phi_membership(Ideal.parse(R, ["x + y"]), standard_splitting(R), 2)
    assert criterion.elapsed() < 30


def test_criterion_9_groebner_oracle(criterion):
    rng = random.Random(99)
    ideals = [I for I in corpus() if not I.is_zero()]
    pairs = 0
    members = 0
    while pairs < 600:
        I = rng.choice(ideals)
        ring = I.ring
        if rng.random() < 0.5:
            f = ring.zero
            for g in I.gens:
                d = max(0, rng.randint(0, 6) - g.degree())
                f = f + random_poly(ring, rng, terms=3, degree=d) * g
            f = f.ring.poly({e: c for e, c in f.items() if ring.degree(e) <= 6})
        else:
            f = random_poly(ring, rng, terms=4, degree=2)
        assert I.contains(f) == span_member(f, I.gens), (f, I)
        members += I.contains(f)
        pairs += 1
    assert pairs >= 500 and 0 < members < pairs
    assert criterion.elapsed() < 60
