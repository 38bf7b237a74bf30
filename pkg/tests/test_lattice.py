import pytest

from fsplit import HilbertPolynomial, Ideal, Ring
from fsplit.ideal import ideal_intersection, ideal_sum, saturate
from fsplit.lattice import (
    ArityError,
    SeedNotCompatibleError,
    antichains,
    brute_force_toric,
    coordinate_points,
    enumerate_closure,
    filter_by_hilbert,
    minimal_primes_monomial,
)
from fsplit.splitting import Splitting, is_compatible, standard_splitting
from oracles import down_closed_families

R2 = Ring(2, "xy")


def ideals(ring, *gens_lists):
    return {Ideal.parse(ring, g) for g in gens_lists}


def test_minimal_primes_examples():
    R = Ring(2, "xyz")
    assert minimal_primes_monomial(Ideal.parse(R, ["x*y"])) == [
        Ideal.parse(R, ["x"]), Ideal.parse(R, ["y"])]
    assert set(minimal_primes_monomial(Ideal.parse(R, ["x*y", "y*z", "x^2*z"]))) == ideals(
        R, ["x", "y"], ["x", "z"], ["y", "z"])
    assert minimal_primes_monomial(Ideal.parse(R, ["x^3", "x*y"])) == [Ideal.parse(R, ["x"])]
    assert minimal_primes_monomial(Ideal.parse(R, ["1"])) == []
    assert minimal_primes_monomial(Ideal(R)) == [Ideal(R)]


def test_closure_example():
    L = enumerate_closure([Ideal.parse(R2, ["x*y"])], standard_splitting(R2))
    assert set(L.members) == ideals(R2, ["x"], ["y"], ["x*y"], ["x", "y"])
    assert not L.partial
    assert [step.operation for step in L.closure_log][0] == "seed"


def test_closure_is_a_fixed_point():
    R = Ring(3, "xyz")
    phi = standard_splitting(R)
    L = enumerate_closure([Ideal.parse(R, ["x*y*z"])], phi)
    members = set(L.members)
    for I in members:
        assert is_compatible(phi, I).verdict
        for J in members:
            assert ideal_sum(I, J) in members
            assert ideal_intersection(I, J) in members
        for P in minimal_primes_monomial(I):
            assert P in members
    # running again from the output changes nothing
    again = enumerate_closure(L.members, phi)
    assert set(again.members) == members


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_closure_equals_brute_force(p, n):
    R = Ring(p, "xyz"[:n])
    phi = standard_splitting(R)
    brute = brute_force_toric(phi)
    closure = enumerate_closure([Ideal(R, [R.monomial((1,) * n)])], phi)
    assert set(closure.members) == set(brute.without_trivial())


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_brute_force_counts(p, n):
    R = Ring(p, "xyz"[:n])
    L = brute_force_toric(standard_splitting(R))
    assert len(L) == down_closed_families(n)
    assert L.anomalies == []
    assert len(antichains(n)) == len(L)


def test_brute_force_members_are_radical_monomial():
    R = Ring(3, "xyz")
    for I in brute_force_toric(standard_splitting(R)):
        assert I.is_monomial() or I.is_zero()
        if I.is_proper() and not I.is_zero():
            assert I.is_squarefree_monomial()
            meet = minimal_primes_monomial(I)[0]
            for P in minimal_primes_monomial(I)[1:]:
                meet = ideal_intersection(meet, P)
            assert meet == I


def test_non_squarefree_not_compatible():
    phi = standard_splitting(R2)
    assert not is_compatible(phi, Ideal.parse(R2, ["x", "y^2"])).verdict
    assert not is_compatible(phi, Ideal.parse(R2, ["x^2"])).verdict


def test_brute_force_arity_limit():
    with pytest.raises(ArityError):
        brute_force_toric(standard_splitting(Ring(2, "abcde")))


def test_seed_not_compatible():
    with pytest.raises(SeedNotCompatibleError) as info:
        enumerate_closure([Ideal.parse(R2, ["x + y"])], standard_splitting(R2))
    cert = info.value.certificate
    assert cert.witness == R2.parse("x^2 + x*y")


def test_partial_flag_for_non_monomial_members():
    # x*y + y^2 = (x + y) * y splits with (x + y) compatible
    phi = Splitting(R2.parse("x*y + y^2"))
    L = enumerate_closure([Ideal.parse(R2, ["x + y"])], phi)
    assert L.partial
    assert Ideal.parse(R2, ["x + y"]) in L


def test_hilbert_filter():
    L = brute_force_toric(standard_splitting(R2))
    assert set(filter_by_hilbert(L, HilbertPolynomial([1]))) == ideals(R2, ["x"], ["y"])
    assert set(filter_by_hilbert(L, HilbertPolynomial([2]))) == ideals(R2, ["x*y"])
    assert set(filter_by_hilbert(L, HilbertPolynomial([1, 1]))) == {Ideal(R2)}
    assert filter_by_hilbert(L, HilbertPolynomial([3])) == []


def test_hilbert_filter_uses_saturation():
    R = Ring(2, "xyz")
    L = brute_force_toric(standard_splitting(R))
    points = filter_by_hilbert(L, HilbertPolynomial([1]))
    assert set(points) == set(coordinate_points(R))
    for I in filter_by_hilbert(L, HilbertPolynomial([3])):
        assert saturate(I) == I


def test_coordinate_points_are_compatible():
    for p in (2, 3):
        R = Ring(p, "xyz")
        L = brute_force_toric(standard_splitting(R))
        for P in coordinate_points(R):
            assert P in L
