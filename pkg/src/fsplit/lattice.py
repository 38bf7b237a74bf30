"""The finite set of ideals compatible with a splitting.

:func:`enumerate_closure` grows a seed set under sums, intersections and
minimal primes; :func:`brute_force_toric` lists every squarefree monomial
ideal and keeps the compatible ones, as an independent check in the
torus-invariant case.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from fsplit.algebra import AlgebraError, Ring, exponents_of_degree
from fsplit.hilbert import HilbertPolynomial, hilbert_polynomial
from fsplit.ideal import Ideal, ideal_intersection, ideal_of_variables, ideal_sum, saturate
from fsplit.splitting import IncompatibleError, Splitting, is_compatible


class NonMonomialError(AlgebraError):
    pass


class SeedNotCompatibleError(IncompatibleError):
    pass


class ArityError(AlgebraError):
    pass


@dataclass(frozen=True)
class ClosureStep:
    operation: str
    inputs: tuple
    output: Ideal

    def as_dict(self):
        return {"operation": self.operation,
                "inputs": [I.key for I in self.inputs],
                "output": self.output.key}


@dataclass
class IdealLattice:
    splitting: Splitting
    members: list
    closure_log: list = field(default_factory=list)
    partial: bool = False
    anomalies: list = field(default_factory=list)

    def __contains__(self, I: Ideal) -> bool:
        return any(I == J for J in self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def keys(self) -> set[str]:
        return {I.key for I in self.members}

    def without_trivial(self) -> list[Ideal]:
        return [I for I in self.members if not I.is_zero() and not I.is_unit()]


def worklist_key(I: Ideal) -> tuple:
    return (sum(g.degree() for g in I.basis), I.key)


# -- minimal primes ------------------------------------------------------------

def _minimal_covers(supports: list[frozenset]) -> list[frozenset]:
    found = set()

    def rec(chosen: frozenset, remaining: list):
        remaining = [s for s in remaining if not (s & chosen)]
        if not remaining:
            found.add(chosen)
            return
        pick = min(remaining, key=lambda s: (len(s), sorted(s)))
        for v in sorted(pick):
            rec(chosen | {v}, remaining)

    rec(frozenset(), supports)
    return [c for c in found if not any(o < c for o in found)]


def minimal_primes_monomial(I: Ideal) -> list[Ideal]:
    """Minimal primes of a monomial ideal, each generated by variables.

    They are the minimal sets of variables meeting the support of every
    generator.  Returned in worklist order.
    """
    if not I.is_monomial():
        raise NonMonomialError(f"non-monomial input: {I}")
    if I.is_unit():
        return []
    supports = [frozenset(i for i, a in enumerate(g.monomials()[0]) if a) for g in I.basis]
    primes = [ideal_of_variables(I.ring, c) for c in _minimal_covers(supports)]
    return sorted(primes, key=worklist_key)


# -- closure ----------------------------------------------------------------------

def enumerate_closure(seeds: Iterable[Ideal], phi: Splitting,
                      primes: bool = True) -> IdealLattice:
    """Least set containing the seeds, closed under sum, intersection and minimal primes.

    Minimal primes are only available for monomial members; meeting a
    non-monomial member marks the result ``partial``.
    """
    queue: list = []
    queued: set[str] = set()
    members: dict[str, Ideal] = {}
    log: list[ClosureStep] = []
    partial = False

    def push(I: Ideal):
        if I.key in queued:
            return False
        queued.add(I.key)
        heapq.heappush(queue, (worklist_key(I), len(queued), I))
        return True

    for s in sorted(seeds, key=worklist_key):
        cert = is_compatible(phi, s)
        if not cert.verdict:
            raise SeedNotCompatibleError(
                f"seed not compatible: {s}; phi({cert.witness}) = {cert.image}", cert)
        if push(s):
            log.append(ClosureStep("seed", (), s))

    while queue:
        _, _, I = heapq.heappop(queue)
        if not is_compatible(phi, I).verdict:
            raise AssertionError(f"closure produced an incompatible ideal {I}")
        members[I.key] = I
        produced = []
        for J in sorted(members.values(), key=worklist_key):
            produced.append(("sum", (I, J), ideal_sum(I, J)))
            produced.append(("intersection", (I, J), ideal_intersection(I, J)))
        if primes:
            if I.is_monomial():
                for P in minimal_primes_monomial(I):
                    produced.append(("minimal-prime", (I,), P))
            else:
                partial = True
        for op, ins, out in produced:
            if push(out):
                log.append(ClosureStep(op, ins, out))

    ordered = sorted(members.values(), key=worklist_key)
    return IdealLattice(phi, ordered, log, partial=partial)


# -- toric brute force ---------------------------------------------------------------

def antichains(n: int) -> list[tuple[frozenset, ...]]:
    """Every antichain of subsets of {0..n-1} (including the empty one and {∅})."""
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]
    out = []

    def rec(i, chosen):
        if i == len(subsets):
            out.append(tuple(chosen))
            return
        rec(i + 1, chosen)
        s = subsets[i]
        if all(not (s <= c or c <= s) for c in chosen):
            chosen.append(s)
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return out


def squarefree_ideal(ring: Ring, faces: Iterable[frozenset]) -> Ideal:
    gens = []
    for s in faces:
        e = tuple(1 if i in s else 0 for i in range(ring.nvars))
        gens.append(ring.monomial(e))
    return Ideal(ring, gens)


def nonsquarefree_sample(ring: Ring, max_degree: int = 3) -> list[Ideal]:
    """Monomial ideals (m) and (m, x_i) for non-squarefree m of degree <= max_degree."""
    out = []
    for d in range(2, max_degree + 1):
        for e in sorted(exponents_of_degree((1,) * ring.nvars, d)):
            if max(e) < 2:
                continue
            m = ring.monomial(e)
            out.append(Ideal(ring, [m]))
            for i in range(ring.nvars):
                if e[i] == 0:
                    out.append(Ideal(ring, [m, ring.var(i)]))
    return out


def brute_force_toric(phi: Splitting, max_arity: int = 4,
                      sample_degree: int = 3) -> IdealLattice:
    ring = phi.ring
    if not phi.premultiplier.is_monomial():
        raise AlgebraError("brute force needs a monomial premultiplier")
    if ring.nvars > max_arity:
        raise ArityError("arity %d exceeds the limit %d" % (ring.nvars, max_arity))
    members = []
    for chain in antichains(ring.nvars):
        I = squarefree_ideal(ring, chain)
        if is_compatible(phi, I).verdict:
            members.append(I)
    anomalies = [I for I in nonsquarefree_sample(ring, sample_degree)
                 if is_compatible(phi, I).verdict]
    members.sort(key=worklist_key)
    return IdealLattice(phi, members, anomalies=anomalies)


# -- Hilbert filter --------------------------------------------------------------------

def filter_by_hilbert(lattice: IdealLattice, f: HilbertPolynomial) -> list[Ideal]:
    """Members whose saturation is proper with Hilbert polynomial ``f``."""
    out = []
    for I in lattice.members:
        if not I.is_homogeneous():
            continue
        S = saturate(I)
        if S.is_unit():
            continue
        if hilbert_polynomial(S) == f:
            out.append(I)
    return out


def coordinate_points(ring: Ring) -> list[Ideal]:
    """Ideals (x_j : j != i) of the torus-fixed coordinate points."""
    return [ideal_of_variables(ring, [j for j in range(ring.nvars) if j != i])
            for i in range(ring.nvars)]
