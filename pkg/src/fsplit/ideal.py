"""Ideals of a polynomial ring and the operations built on Gröbner bases."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from fsplit.algebra import (
    AlgebraError,
    Polynomial,
    Ring,
    check_same_ring,
    divides,
    frobenius,
    graded_piece_basis,
    lcm_exp,
    sub_exp,
)
from fsplit.groebner import (
    GREVLEX,
    buchberger,
    divide,
    elimination,
    tracked_buchberger,
)


class NotGradedError(AlgebraError):
    pass


class NotMemberError(AlgebraError):
    pass


class Ideal:
    """An ideal given by generators, with a lazily computed reduced grevlex basis.

    Two ideals compare equal iff their reduced bases coincide.
    """

    def __init__(self, ring: Ring, gens: Iterable = (), graded: bool = False):
        self.ring = ring
        polys = []
        for g in gens:
            g = ring(g)
            if g:
                polys.append(g)
        self.gens: tuple[Polynomial, ...] = tuple(polys)
        if graded and not self.is_homogeneous():
            raise NotGradedError(f"generators of {self} are not homogeneous")
        self._lock = threading.Lock()
        self._basis = None
        self._tracked = None
        self._key = None

    @classmethod
    def parse(cls, ring: Ring, texts: Sequence[str], graded: bool = False) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts], graded=graded)

    # -- cached bases -------------------------------------------------------

    @property
    def basis(self) -> list[Polynomial]:
        """Reduced grevlex Gröbner basis (monic, increasing leading monomial)."""
        if self._basis is None:
            with self._lock:
                if self._basis is None:
                    self._basis = buchberger(self.gens, GREVLEX, ring=self.ring)
        return self._basis

    def tracked_basis(self):
        """(G, A) with G the reduced basis and G[i] = sum_j A[i][j] * gens[j]."""
        if self._tracked is None:
            with self._lock:
                if self._tracked is None:
                    self._tracked = tracked_buchberger(self.gens, GREVLEX, ring=self.ring)
        return self._tracked

    @property
    def key(self) -> str:
        """Canonical serialization of the reduced basis."""
        if self._key is None:
            self._key = "(" + (", ".join(str(g) for g in self.basis) or "0") + ")"
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.key == other.key

    def __hash__(self):
        return hash((self.ring, self.key))

    def __repr__(self):
        return f"Ideal{self.key}"

    def __str__(self):
        return self.key

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        b = self.basis
        return len(b) == 1 and b[0].is_constant()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.basis)

    def is_squarefree_monomial(self) -> bool:
        return self.is_monomial() and all(
            max(e) <= 1 for g in self.basis for e in g.monomials())

    def leading_monomials(self) -> list[tuple]:
        key = self.ring.grevlex_key
        return [max(g._terms, key=key) for g in self.basis]

    def max_generator_degree(self) -> int:
        return max((g.degree() for g in self.gens), default=0)

    # -- membership -----------------------------------------------------------

    def normal_form(self, f) -> Polynomial:
        f = self.ring(f)
        return divide(f, self.basis)[1]

    def contains(self, f) -> bool:
        return not self.normal_form(f)

    def __contains__(self, f) -> bool:
        return self.contains(f)

    def issubset(self, other: "Ideal") -> bool:
        check_same_ring(self.ring, other.ring)
        return all(other.contains(g) for g in self.gens)

    def __le__(self, other):
        return self.issubset(other)

    def lift(self, f) -> list[Polynomial]:
        """Cofactors q with f = sum q_j * gens[j]; raises if f is not in the ideal."""
        f = self.ring(f)
        if not self.gens:
            if f:
                raise NotMemberError(f"{f} is not in the zero ideal")
            return []
        G, A = self.tracked_basis()
        quots, rem = divide(f, G)
        if rem:
            raise NotMemberError(f"{f} is not in {self}")
        out = [self.ring.zero] * len(self.gens)
        for q, row in zip(quots, A):
            if q:
                for j, a in enumerate(row):
                    if a:
                        out[j] = out[j] + q * a
        return out

    def graded_piece(self, deg: int) -> list[Polynomial]:
        """F_p-basis of I_deg: m - NF(m) for each leading-term monomial m of degree deg."""
        self._require_graded()
        lms = self.leading_monomials()
        out = []
        for m in graded_piece_basis(self.ring, deg):
            if any(divides(l, m) for l in lms):
                mono = self.ring.monomial(m)
                out.append(mono - self.normal_form(mono))
        return out

    def standard_monomials(self, deg: int) -> list[tuple]:
        """Monomials of degree ``deg`` outside the leading-term ideal (a basis of (R/I)_deg)."""
        self._require_graded()
        lms = self.leading_monomials()
        return [m for m in graded_piece_basis(self.ring, deg)
                if not any(divides(l, m) for l in lms)]

    def _require_graded(self):
        if not self.is_homogeneous():
            raise NotGradedError(f"{self} is not graded")

    # -- operators --------------------------------------------------------

    def __add__(self, other):
        return ideal_sum(self, other)

    def __and__(self, other):
        return ideal_intersection(self, other)

    def __mul__(self, other):
        check_same_ring(self.ring, other.ring)
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])


def ideal_of_variables(ring: Ring, indices: Iterable[int] | None = None) -> Ideal:
    if indices is None:
        indices = range(ring.nvars)
    return Ideal(ring, [ring.var(i) for i in sorted(indices)])


def normal_form(f: Polynomial, I: Ideal) -> Polynomial:
    return I.normal_form(f)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    check_same_ring(I.ring, J.ring)
    return Ideal(I.ring, I.gens + J.gens)


def _embed(f: Polynomial, big: Ring) -> Polynomial:
    return Polynomial._raw(big, {(0,) + e: c for e, c in f.items()})


def _restrict(f: Polynomial, small: Ring) -> Polynomial:
    return Polynomial._raw(small, {e[1:]: c for e, c in f.items()})


def _fresh_name(ring: Ring) -> str:
    name = "t"
    while name in ring.variables:
        name += "_"
    return name


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    check_same_ring(I.ring, J.ring)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring)
    if I.is_unit():
        return Ideal(ring, J.gens)
    if J.is_unit():
        return Ideal(ring, I.gens)
    big = ring.extend(_fresh_name(ring))
    t = big.var(0)
    gens = [t * _embed(f, big) for f in I.gens]
    gens += [(big.one - t) * _embed(g, big) for g in J.gens]
    G = buchberger(gens, elimination(1), ring=big)
    return Ideal(ring, [_restrict(g, ring) for g in G if all(e[0] == 0 for e in g._terms)])


def exact_quotient(f: Polynomial, h: Polynomial) -> Polynomial:
    (q,), r = divide(f, [h])
    if r:
        raise AlgebraError(f"{h} does not divide {f}")
    return q


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = intersection over generators h of J of (I ∩ (h)) / h."""
    check_same_ring(I.ring, J.ring)
    ring = I.ring
    result = Ideal(ring, [ring.one])
    for h in J.gens:
        if I.contains(h):
            continue
        meet = ideal_intersection(I, Ideal(ring, [h]))
        part = Ideal(ring, [exact_quotient(g, h) for g in meet.basis])
        result = ideal_intersection(result, part)
    return result


def saturate(I: Ideal, max_steps: int = 64) -> Ideal:
    """(I : m^∞) for m the ideal of all variables, by iterated quotients."""
    m = ideal_of_variables(I.ring)
    current = I
    for _ in range(max_steps):
        nxt = ideal_quotient(current, m)
        if nxt == current:
            return current
        current = nxt
    raise AlgebraError("saturation did not stabilise in %d steps" % max_steps)


def bracket_power(I: Ideal, p: int | None = None) -> Ideal:
    """I^[p]: the ideal of p-th powers of the generators."""
    if p is not None and p != I.ring.p:
        raise AlgebraError("bracket powers are only taken at the characteristic")
    return Ideal(I.ring, [frobenius(g) for g in I.gens])


@dataclass(frozen=True)
class SyzygyModule:
    """Generators of the first syzygy module of ``generators``."""

    generators: tuple
    relations: tuple

    def check(self) -> bool:
        ring = self.generators[0].ring if self.generators else None
        for s in self.relations:
            total = ring.zero
            for a, f in zip(s, self.generators):
                total = total + a * f
            if total:
                return False
        return True

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)


def syzygies(I: Ideal) -> SyzygyModule:
    """First syzygies of the generators of I via Schreyer's construction.

    Syzygies among the reduced basis come from reducing every S-pair to
    zero; they are pulled back along the tracked change of generators,
    and the relations gens = B * G contribute the rows e_j - (B A)_j.
    """
    ring = I.ring
    F = list(I.gens)
    m = len(F)
    if m == 0:
        return SyzygyModule((), ())
    G, A = I.tracked_basis()
    key = ring.grevlex_key
    lms = [max(g._terms, key=key) for g in G]
    zero = ring.zero
    rels = []

    def pull_back(sigma):
        out = [zero] * m
        for coeff, row in zip(sigma, A):
            if coeff:
                for j, a in enumerate(row):
                    if a:
                        out[j] = out[j] + coeff * a
        return out

    t = len(G)
    for i in range(t):
        for j in range(i + 1, t):
            L = lcm_exp(lms[i], lms[j])
            mi, mj = sub_exp(L, lms[i]), sub_exp(L, lms[j])
            s = G[i].mul_term(mi) - G[j].mul_term(mj)
            quots, rem = divide(s, G)
            assert not rem, "reduced basis is not a Gröbner basis"
            sigma = [-q for q in quots]
            sigma[i] = sigma[i] + ring.monomial(mi)
            sigma[j] = sigma[j] - ring.monomial(mj)
            rels.append(pull_back(sigma))
    for j, f in enumerate(F):
        quots, rem = divide(f, G)
        assert not rem
        row = pull_back(quots)
        row[j] = row[j] - ring.one
        rels.append([-a for a in row])
    seen = set()
    out = []
    for r in rels:
        if not any(r):
            continue
        t_ = tuple(r)
        if t_ in seen:
            continue
        seen.add(t_)
        out.append(t_)
    module = SyzygyModule(tuple(F), tuple(out))
    assert module.check()
    return module
