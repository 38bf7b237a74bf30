"""Tangent spaces at compatibly split ideals.

A degree-0 R-linear map lambda: I -> R/I is determined by the images of
the generators, lambda(f_j) in (R/I)_{deg f_j}, subject to one linear
condition per syzygy.  Intertwining with the splitting adds more linear
conditions; everything is solved over F_p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from fsplit.algebra import AlgebraError, Polynomial, frobenius
from fsplit.ideal import Ideal, NotMemberError, saturate, syzygies
from fsplit.linalg import nullspace, rank
from fsplit.splitting import IncompatibleError, Splitting, apply, is_compatible


class RigidityError(AlgebraError):
    pass


@dataclass
class HomSpace:
    """Unknown coefficients of lambda(f_j) on standard monomials, plus syzygy relations."""

    ideal: Ideal
    generator_degrees: list
    unknowns: list          # (generator index, exponent of a standard monomial)
    relations: list         # rows over F_p, one column per unknown

    @property
    def size(self) -> int:
        return len(self.unknowns)

    def dimension(self) -> int:
        return self.size - rank(self.relations, self.size, self.ideal.ring.p)

    def solutions(self) -> list[list[int]]:
        return nullspace(self.relations, self.size, self.ideal.ring.p)

    def images(self, vector: Sequence[int]) -> list[Polynomial]:
        """lambda(f_j) for the map with the given coefficient vector."""
        ring = self.ideal.ring
        out = [ring.zero] * len(self.generator_degrees)
        for (j, e), c in zip(self.unknowns, vector):
            if c:
                out[j] = out[j] + ring.monomial(e, c)
        return out


def lambda_columns(H: HomSpace, cofactors: Sequence[Polynomial]) -> list[Polynomial]:
    """Column u of lambda(sum q_j f_j): NF(q_j * x^b) for the unknown u = (j, b)."""
    I = H.ideal
    ring = I.ring
    cols = []
    for j, e in H.unknowns:
        q = cofactors[j]
        cols.append(I.normal_form(q.mul_term(e)) if q else ring.zero)
    return cols


def rows_from_columns(cols: Sequence[Polynomial]) -> list[list[int]]:
    monos = set()
    for c in cols:
        monos.update(c.terms)
    key = cols[0].ring.grevlex_key if cols else None
    return [[c.coefficient(m) for c in cols]
            for m in sorted(monos, key=key, reverse=True)]


def _homogeneous_parts(syz: Sequence[Polynomial], degrees: Sequence[int]):
    """Split a syzygy of homogeneous generators into its graded pieces."""
    parts: dict[int, list] = {}
    ring = syz[0].ring
    for j, s in enumerate(syz):
        for d, comp in s.homogeneous_components().items():
            bucket = parts.setdefault(d + degrees[j], [ring.zero] * len(syz))
            bucket[j] = comp
    return [parts[d] for d in sorted(parts)]


def hom_degree_zero(I: Ideal) -> HomSpace:
    if I.is_zero() or I.is_unit():
        raise RigidityError("the tangent space needs a proper nonzero ideal")
    I._require_graded()
    degrees = [f.degree() for f in I.gens]
    unknowns = [(j, e) for j, d in enumerate(degrees) for e in I.standard_monomials(d)]
    H = HomSpace(I, degrees, unknowns, [])
    if not unknowns:
        return H
    rels = []
    for s in syzygies(I):
        for part in _homogeneous_parts(s, degrees):
            rels.extend(rows_from_columns(lambda_columns(H, part)))
    H.relations = [r for r in rels if any(r)]
    return H


def apply_quotient(phi: Splitting, I: Ideal, v: Polynomial) -> Polynomial:
    """The induced splitting on R/I, evaluated on any lift ``v``."""
    return I.normal_form(apply(phi, v))


def constraint_rows(H: HomSpace, phi: Splitting, i: Polynomial,
                    lift: Sequence[Polynomial] | None = None) -> list[list[int]]:
    """Rows of lambda(phi(i)) = phi_{R/I}(lambda(i)) for one element i of I."""
    I = H.ideal
    if lift is None:
        lift = I.lift(i)
    lhs = lambda_columns(H, I.lift(apply(phi, i)))
    lam_i = lambda_columns(H, lift)
    cols = [a - apply_quotient(phi, I, b) for a, b in zip(lhs, lam_i)]
    return [r for r in rows_from_columns(cols) if any(r)]


def intertwining_constraints(H: HomSpace, phi: Splitting,
                             elements: Sequence[Polynomial]) -> list[list[int]]:
    """Syzygy relations of H augmented by the intertwining rows of each element."""
    I = H.ideal
    for i in elements:
        if not I.contains(i):
            raise NotMemberError(f"constraint element {i} is not in {I}")
    cert = is_compatible(phi, I)
    if not cert.verdict:
        raise IncompatibleError(
            f"{phi} does not preserve {I}: phi({cert.witness}) = {cert.image}", cert)
    rows = list(H.relations)
    if not H.unknowns:
        return rows
    for i in elements:
        rows.extend(constraint_rows(H, phi, i))
    return rows


@dataclass
class RigidityReport:
    ideal: Ideal
    dim_hom: int
    dim_intertwined: int
    constraint_elements: list
    degree_bound: int
    saturated: bool = True
    notes: list = field(default_factory=list)

    @property
    def conclusive(self) -> bool:
        return self.dim_intertwined == 0

    def as_dict(self) -> dict:
        return {
            "ideal": self.ideal.key,
            "dim_hom": self.dim_hom,
            "dim_intertwined": self.dim_intertwined,
            "degree_bound": self.degree_bound,
            "saturated": self.saturated,
            "constraint_elements": [str(e) for e in self.constraint_elements],
            "conclusive": self.conclusive,
            "notes": list(self.notes),
        }


def rigidity_report(I: Ideal, phi: Splitting, degree_bound: int | None = None) -> RigidityReport:
    """dim Hom(I, R/I)_0 before and after imposing the intertwining rows.

    The constraint elements are the p-th powers of the generators and an
    F_p-basis of I_k for every k <= degree_bound (default p times the
    largest generator degree).  A zero result certifies that the tangent
    space vanishes; a positive one only says the bound was too small.
    """
    p = I.ring.p
    if degree_bound is None:
        degree_bound = p * I.max_generator_degree()
    H = hom_degree_zero(I)
    elements = [frobenius(f) for f in I.gens]
    for k in range(degree_bound + 1):
        elements.extend(I.graded_piece(k))
    rows = intertwining_constraints(H, phi, elements)
    dim = H.size - rank(rows, H.size, p) if H.size else 0
    report = RigidityReport(I, H.dimension(), dim, elements, degree_bound,
                            saturated=saturate(I) == I)
    if not report.saturated:
        report.notes.append("ideal is not saturated; it is not a Hilbert scheme point as given")
    if dim:
        report.notes.append("inconclusive: increase degree_bound")
    return report


def phi_membership(I: Ideal, phi: Splitting, N: int) -> bool:
    """phi(r)^p lies in I_N for every r in a basis of I_N."""
    for r in I.graded_piece(N):
        s = frobenius(apply(phi, r))
        if not s:
            continue
        if not (s.is_homogeneous() and s.degree() == N and I.contains(s)):
            return False
    return True
