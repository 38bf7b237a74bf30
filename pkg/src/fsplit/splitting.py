"""Frobenius splittings of a polynomial ring, represented by premultipliers.

Every p^{-1}-linear endomorphism of F_p[x_1..x_n] has the form
``f -> Tr(g * f)`` for a unique polynomial g, where Tr is the trace map
below.  A :class:`Splitting` stores that g.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from fsplit.algebra import (
    AlgebraError,
    Polynomial,
    Ring,
    bounded_exponents,
    check_same_ring,
    exponents_of_degree,
    graded_piece_basis,
    homogeneous_component,
)
from fsplit.ideal import Ideal, bracket_power, ideal_quotient


class NotASplittingError(AlgebraError):
    pass


class IncompatibleError(AlgebraError):
    """The splitting does not preserve the ideal; carries the certificate."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


def trace(f: Polynomial) -> Polynomial:
    """x^c -> x^((c - (p-1))/p) when every c_i = p-1 mod p, else 0."""
    p = f.ring.p
    q = p - 1
    out: dict = {}
    for e, c in f.items():
        if all(a % p == q for a in e):
            t = tuple((a - q) // p for a in e)
            out[t] = (out.get(t, 0) + c) % p
    return Polynomial._raw(f.ring, {e: c for e, c in out.items() if c})


def is_splitting(g: Polynomial) -> bool:
    return trace(g) == g.ring.one


class Splitting:
    """The splitting f -> Tr(g * f) for a premultiplier g with Tr(g) = 1."""

    __slots__ = ("ring", "premultiplier")

    def __init__(self, premultiplier: Polynomial):
        t = trace(premultiplier)
        if t != premultiplier.ring.one:
            raise NotASplittingError(f"premultiplier is not a splitting: Tr(g) = {t}")
        self.ring = premultiplier.ring
        self.premultiplier = premultiplier

    def __call__(self, f) -> Polynomial:
        return apply(self, f)

    def __eq__(self, other):
        return isinstance(other, Splitting) and other.premultiplier == self.premultiplier

    def __hash__(self):
        return hash(self.premultiplier)

    def __repr__(self):
        return f"Splitting(g={self.premultiplier})"


def apply(phi: Splitting, f) -> Polynomial:
    f = phi.ring(f)
    return trace(phi.premultiplier * f)


def standard_splitting(ring: Ring) -> Splitting:
    """Premultiplier (x_1 ... x_n)^(p-1), the torus-invariant splitting."""
    e = (ring.p - 1,) * ring.nvars
    return Splitting(ring.monomial(e))


def monomial_splittings(ring: Ring) -> list[Polynomial]:
    """All monomials of total degree n(p-1) that are splittings."""
    n, p = ring.nvars, ring.p
    found = []
    for e in exponents_of_degree((1,) * n, n * (p - 1)):
        m = ring.monomial(e)
        if is_splitting(m):
            found.append(m)
    return found


# -- gradings ------------------------------------------------------------------

def graded_target(ring: Ring) -> tuple:
    """Multidegree a graded premultiplier must have: (p-1) * sum of variable weights."""
    return tuple((ring.p - 1) * w for w in ring.grading.total_weight())


def graded_witness(phi: Splitting, bound: int):
    """First monomial r in R_k (k <= bound) where phi breaks the grading rule.

    The rule, per multidegree d of r: phi(r) = 0 unless p divides d, and
    then phi(r) is homogeneous of multidegree d/p.  Returns
    ``(r, phi(r))`` or None.
    """
    ring = phi.ring
    p = ring.p
    for k in range(bound + 1):
        for e in graded_piece_basis(ring, k):
            d = ring.multidegree(e)
            img = apply(phi, ring.monomial(e))
            if not img:
                continue
            if any(x % p for x in d):
                return ring.monomial(e), img
            target = tuple(x // p for x in d)
            if img.multidegrees() != {target}:
                return ring.monomial(e), img
    return None


def is_graded(phi: Splitting, bound: int | None = None) -> bool:
    """True iff the premultiplier is homogeneous of the graded target degree.

    With ``bound`` the answer is cross-checked against the pointwise rule
    on monomial bases of R_k for k <= bound.
    """
    g = phi.premultiplier
    verdict = g.multidegrees() == {graded_target(phi.ring)}
    if bound is not None:
        scan = graded_witness(phi, bound)
        if verdict and scan is not None:
            raise AssertionError(f"homogeneous premultiplier but {scan[0]} -> {scan[1]}")
    return verdict


def graded_part(phi: Splitting) -> Splitting:
    g = homogeneous_component(phi.premultiplier, graded_target(phi.ring))
    try:
        return Splitting(g)
    except NotASplittingError as exc:
        raise NotASplittingError(f"graded part is not a splitting: {exc}") from None


# -- compatibility ----------------------------------------------------------------

@dataclass(frozen=True)
class CompatibilityCertificate:
    ideal: Ideal
    splitting: Splitting
    verdict: bool
    witness: Polynomial | None = None
    image: Polynomial | None = None
    spot_checks: int = field(default=0, compare=False)

    def __bool__(self):
        return self.verdict


def fedder_colon(phi: Splitting, I: Ideal) -> Ideal:
    """The ideal (I^[p] : I); phi preserves I iff its premultiplier lies here."""
    return ideal_quotient(bracket_power(I), I)


def fedder_criterion(phi: Splitting, I: Ideal) -> bool:
    """g in (I^[p] : I), tested generator by generator: g * f in I^[p] for each f."""
    check_same_ring(phi.ring, I.ring)
    if I.is_zero():
        return True
    bracket = bracket_power(I)
    g = phi.premultiplier
    return all(bracket.contains(g * f) for f in I.gens)


def spanning_products(I: Ideal, exps: Iterator) -> Iterator[Polynomial]:
    for e in exps:
        for f in I.basis:
            yield f.mul_term(e)


def _low_exponents(ring: Ring) -> list[tuple]:
    """Exponents with every entry below p, by increasing degree."""
    p = ring.p
    exps = list(bounded_exponents(ring.nvars, p - 1))
    exps.sort(key=lambda e: (ring.degree(e), tuple(-a for a in e)))
    return exps


def find_witness(phi: Splitting, I: Ideal):
    """h in I with phi(h) outside I, scanning m * b for basis elements b.

    Monomials m with exponents below p suffice: any element of I is a sum
    of a^p * m * b and phi(a^p m b) = a phi(m b).
    """
    for h in spanning_products(I, _low_exponents(I.ring)):
        img = apply(phi, h)
        if not I.contains(img):
            return h, img
    return None


def semantic_compatible(phi: Splitting, I: Ideal, bound: int | None = None):
    """Check phi(h) in I for h = m * b, b in the reduced basis, deg h <= bound.

    Returns ``(ok, witness)``.  Default bound is p * (max generator
    degree) + number of variables.
    """
    ring = I.ring
    if bound is None:
        bound = ring.p * I.max_generator_degree() + ring.nvars
    for b in I.basis:
        db = b.degree()
        for k in range(0, bound - db + 1):
            for e in graded_piece_basis(ring, k):
                h = b.mul_term(e)
                if not I.contains(apply(phi, h)):
                    return False, h
    return True, None


def random_element(I: Ideal, rng: random.Random, degree: int = 2) -> Polynomial:
    ring = I.ring
    total = ring.zero
    for f in I.gens:
        coeff = {}
        for _ in range(rng.randint(0, 3)):
            k = rng.randint(0, degree)
            basis = graded_piece_basis(ring, k)
            coeff[rng.choice(basis)] = rng.randrange(ring.p)
        total = total + ring.poly(coeff) * f
    return total


def is_compatible(phi: Splitting, I: Ideal, samples: int = 8,
                  seed: int = 0) -> CompatibilityCertificate:
    """Decide phi(I) ⊆ I.

    The verdict comes from the colon criterion.  A positive verdict is
    spot-checked on the reduced basis and on random elements of I; a
    negative one always carries a verified witness h in I with
    phi(h) not in I.
    """
    check_same_ring(phi.ring, I.ring)
    verdict = fedder_criterion(phi, I)
    if verdict:
        rng = random.Random(seed)
        checks = list(I.basis) + [random_element(I, rng) for _ in range(samples if I.gens else 0)]
        for h in checks:
            if not I.contains(apply(phi, h)):
                raise AssertionError(f"colon criterion accepted {I} but phi({h}) not in I")
        return CompatibilityCertificate(I, phi, True, spot_checks=len(checks))
    found = find_witness(phi, I)
    if found is None:
        raise AssertionError(f"colon criterion rejected {I} but no witness was found")
    h, img = found
    assert I.contains(h) and not I.contains(img)
    return CompatibilityCertificate(I, phi, False, witness=h, image=img)
