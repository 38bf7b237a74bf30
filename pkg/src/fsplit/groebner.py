"""Buchberger's algorithm and multivariate division over F_p.

Internally polynomials are plain ``{exponent: coefficient}`` dicts; the
public entry points take and return :class:`Polynomial` values.  When
``track=True`` every basis element carries cofactors expressing it in
terms of the input generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from fsplit.algebra import (
    DegreeOverflowError,
    Polynomial,
    Ring,
    check_same_ring,
    divides,
    lcm_exp,
    sub_exp,
)


@dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order: ``grevlex``, ``lex`` or ``elim`` (block).

    ``elim`` compares the first ``block`` variables by weighted grevlex
    first and breaks ties by weighted grevlex on all variables, so it
    eliminates those variables.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs block >= 1")

    def key(self, ring: Ring) -> Callable:
        if self.kind == "grevlex":
            return ring.grevlex_key
        if self.kind == "lex":
            return tuple
        k = self.block
        w = ring.grading.weights[0][:k]

        def elim_key(e):
            head = e[:k]
            return (sum(a * b for a, b in zip(w, head)),
                    tuple(-a for a in reversed(head)),
                    ring.grevlex_key(e))
        return elim_key


GREVLEX = MonomialOrder("grevlex")


def elimination(block: int) -> MonomialOrder:
    return MonomialOrder("elim", block)


# -- dict-level helpers ------------------------------------------------------

def _lead(f: dict, key) -> tuple:
    return max(f, key=key)


def _axpy(f: dict, c: int, m: tuple, g: dict, p: int) -> None:
    """f += c * x^m * g, in place."""
    for e, a in g.items():
        t = tuple(x + y for x, y in zip(e, m))
        v = (f.get(t, 0) + c * a) % p
        if v:
            f[t] = v
        else:
            f.pop(t, None)


def _scale(f: dict, c: int, p: int) -> dict:
    return {e: (a * c) % p for e, a in f.items()}


def _add_cofactor(cof: list, c: int, m: tuple, other: list, p: int) -> None:
    for acc, g in zip(cof, other):
        _axpy(acc, c, m, g, p)


def _reduce(f: dict, basis: list, key, p: int, cof=None):
    """Reduce ``f`` by ``basis`` (list of (lm, poly, cofactors) with monic polys).

    Returns the remainder; ``cof`` (if given) is updated in place so the
    relation ``remainder = sum cof_j * gen_j`` is preserved.
    """
    f = dict(f)
    rem: dict = {}
    while f:
        lm = _lead(f, key)
        c = f[lm]
        for glm, g, gcof in basis:
            if divides(glm, lm):
                m = sub_exp(lm, glm)
                _axpy(f, -c, m, g, p)
                if cof is not None:
                    _add_cofactor(cof, -c, m, gcof, p)
                break
        else:
            rem[lm] = c
            del f[lm]
    return rem


def _monic(f: dict, key, p: int, cof=None):
    lm = _lead(f, key)
    inv = pow(f[lm], -1, p)
    f = _scale(f, inv, p)
    if cof is not None:
        cof = [_scale(c, inv, p) for c in cof]
    return lm, f, cof


class _Element:
    __slots__ = ("lm", "poly", "cof", "sugar")

    def __init__(self, lm, poly, cof, sugar):
        self.lm = lm
        self.poly = poly
        self.cof = cof
        self.sugar = sugar


def _buchberger_dicts(ring: Ring, polys: Sequence[dict], order: MonomialOrder,
                      track: bool = False):
    """Core loop.  Returns a reduced Gröbner basis as list of (lm, poly, cofactors)."""
    p = ring.p
    key = order.key(ring)
    deg = ring.degree
    cap = ring.max_degree
    m = len(polys)

    def unit_cof(i):
        if not track:
            return None
        return [({ring.unit_exponent: 1} if j == i else {}) for j in range(m)]

    elems: list[_Element] = []
    active: list[int] = []
    pairs: list[tuple] = []  # (sugar, lcm, i, j)

    def update(h: int) -> None:
        nonlocal active, pairs
        hl = elems[h].lm
        cands = [(g, lcm_exp(elems[g].lm, hl)) for g in active]
        keep = []
        for idx, (g, L) in enumerate(cands):
            coprime = all(a == 0 or b == 0 for a, b in zip(elems[g].lm, hl))
            if coprime:
                keep.append((g, L, True))
                continue
            dominated = any(divides(L2, L) for _, L2 in cands[idx + 1:]) or \
                any(divides(L2, L) for _, L2, _ in keep)
            if not dominated:
                keep.append((g, L, False))
        new_pairs = []
        for g, L, coprime in keep:
            if coprime:
                continue
            eg = elems[g]
            sugar = max(eg.sugar + deg(L) - deg(eg.lm),
                        elems[h].sugar + deg(L) - deg(hl))
            new_pairs.append((sugar, L, g, h))
        old = []
        for sugar, L, i, j in pairs:
            if divides(hl, L) and lcm_exp(elems[i].lm, hl) != L \
                    and lcm_exp(elems[j].lm, hl) != L:
                continue
            old.append((sugar, L, i, j))
        pairs = old + new_pairs
        active = [g for g in active if not divides(hl, elems[g].lm)] + [h]

    def add(poly: dict, cof, sugar) -> bool:
        if not poly:
            return False
        lm, poly, cof = _monic(poly, key, p, cof)
        elems.append(_Element(lm, poly, cof, sugar))
        update(len(elems) - 1)
        return not any(lm)

    def basis_view():
        return [(elems[g].lm, elems[g].poly, elems[g].cof) for g in active]

    unit_found = False
    for i, f in enumerate(polys):
        if not f:
            continue
        cof = unit_cof(i)
        r = _reduce(f, basis_view(), key, p, cof)
        if r and add(r, cof, max(deg(e) for e in f)):
            unit_found = True
            break

    pair_key = lambda t: (t[0], key(t[1]))
    while pairs and not unit_found:
        best = min(range(len(pairs)), key=lambda k: pair_key(pairs[k]))
        sugar, L, i, j = pairs.pop(best)
        if sum(L) > cap:
            raise DegreeOverflowError(
                "S-polynomial of degree %d exceeds the cap %d" % (sum(L), cap))
        ei, ej = elems[i], elems[j]
        mi, mj = sub_exp(L, ei.lm), sub_exp(L, ej.lm)
        s: dict = {}
        _axpy(s, 1, mi, ei.poly, p)
        _axpy(s, -1, mj, ej.poly, p)
        cof = None
        if track:
            cof = [{} for _ in range(m)]
            _add_cofactor(cof, 1, mi, ei.cof, p)
            _add_cofactor(cof, -1, mj, ej.cof, p)
        r = _reduce(s, basis_view(), key, p, cof)
        if r and add(r, cof, sugar):
            unit_found = True

    return _interreduce(ring, basis_view(), key, p, track)


def _interreduce(ring, basis, key, p, track):
    if any(not any(lm) for lm, _, _ in basis):
        lm, poly, cof = next(b for b in basis if not any(b[0]))
        return [(lm, poly, cof)]
    # minimal basis: drop elements whose leading monomial another one divides
    minimal = []
    for idx, (lm, poly, cof) in enumerate(basis):
        if any(divides(olm, lm) and (olm != lm or j < idx)
               for j, (olm, _, _) in enumerate(basis) if j != idx):
            continue
        minimal.append((lm, poly, cof))
    reduced = []
    for idx, (lm, poly, cof) in enumerate(minimal):
        others = [b for j, b in enumerate(minimal) if j != idx]
        tail = dict(poly)
        c = tail.pop(lm)
        # cofactors describe the whole element, so reducing the tail keeps them valid
        tcof = [dict(x) for x in cof] if track else None
        r = _reduce(tail, others, key, p, tcof)
        r[lm] = c
        reduced.append((lm, r, tcof))
    reduced.sort(key=lambda b: key(b[0]))
    return reduced


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
               ring: Ring | None = None) -> list[Polynomial]:
    """Reduced Gröbner basis, monic, sorted by increasing leading monomial."""
    if ring is None:
        if not gens:
            raise ValueError("empty generator list needs an explicit ring")
        ring = gens[0].ring
    for g in gens:
        check_same_ring(ring, g.ring)
    basis = _buchberger_dicts(ring, [dict(g.items()) for g in gens], order)
    return [Polynomial._raw(ring, poly) for _, poly, _ in basis]


def tracked_buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
                       ring: Ring | None = None):
    """Reduced basis G plus matrix A with G[i] = sum_j A[i][j] * gens[j]."""
    if ring is None:
        ring = gens[0].ring
    basis = _buchberger_dicts(ring, [dict(g.items()) for g in gens], order, track=True)
    G = [Polynomial._raw(ring, poly) for _, poly, _ in basis]
    A = [[Polynomial._raw(ring, c) for c in cof] for _, _, cof in basis]
    return G, A


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = GREVLEX):
    """Multivariate division: returns (quotients, remainder) with f = sum q_i d_i + r.

    The divisors need not be monic.  No term of r is divisible by a
    leading monomial of a divisor.
    """
    ring = f.ring
    p = ring.p
    key = order.key(ring)
    ds = []
    for d in divisors:
        check_same_ring(ring, d.ring)
        if d:
            lm = max(d._terms, key=key)
            ds.append((lm, dict(d.items()), pow(d._terms[lm], -1, p)))
        else:
            ds.append(None)
    quots = [dict() for _ in divisors]
    g = dict(f.items())
    rem: dict = {}
    while g:
        lm = _lead(g, key)
        c = g[lm]
        for idx, d in enumerate(ds):
            if d is not None and divides(d[0], lm):
                m = sub_exp(lm, d[0])
                coef = (c * d[2]) % p
                _axpy(g, -coef, m, d[1], p)
                v = (quots[idx].get(m, 0) + coef) % p
                if v:
                    quots[idx][m] = v
                else:
                    quots[idx].pop(m, None)
                break
        else:
            rem[lm] = c
            del g[lm]
    return [Polynomial._raw(ring, q) for q in quots], Polynomial._raw(ring, rem)


def reduce_by_basis(f: Polynomial, basis: Sequence[Polynomial],
                    order: MonomialOrder = GREVLEX) -> Polynomial:
    return divide(f, basis, order)[1]


def leading_monomial(f: Polynomial, order: MonomialOrder = GREVLEX) -> tuple:
    return max(f._terms, key=order.key(f.ring))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    key = order.key(f.ring)
    lf = max(f._terms, key=key)
    lg = max(g._terms, key=key)
    L = lcm_exp(lf, lg)
    p = f.ring.p
    return (f.mul_term(sub_exp(L, lf), pow(f._terms[lf], -1, p))
            - g.mul_term(sub_exp(L, lg), pow(g._terms[lg], -1, p)))
