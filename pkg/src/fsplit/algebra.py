"""Prime fields, graded polynomial rings and their elements.

Polynomials are immutable maps from exponent tuples to nonzero residues
mod p.  Every ring carries a weight matrix; its first row is the
distinguished positive grading, the remaining rows refine it to a
multigrading.
"""

from __future__ import annotations

from itertools import product
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

DEFAULT_MAX_DEGREE = 64

Exponent = tuple  # tuple[int, ...]


class AlgebraError(ValueError):
    pass


class RingMismatchError(AlgebraError):
    pass


class DegreeOverflowError(AlgebraError):
    """A computation produced a monomial above the configured degree cap."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise AlgebraError(f"{p!r} is not a prime")
        self.p = p

    def __call__(self, c: int) -> int:
        return c % self.p

    def inv(self, c: int) -> int:
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("0 has no inverse in F_%d" % self.p)
        return pow(c, -1, self.p)

    def elements(self) -> range:
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F_{self.p}"


class Grading:
    """Integer weight matrix with one row per grading component.

    ``weights[r][i]`` is the r-th degree of variable i.  Row 0 must be
    strictly positive so that every graded piece is finite dimensional.
    """

    __slots__ = ("weights",)

    def __init__(self, weights: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(w) for w in row) for row in weights)
        if not rows:
            raise AlgebraError("a grading needs at least one row")
        n = len(rows[0])
        if any(len(row) != n for row in rows):
            raise AlgebraError("weight rows have different lengths")
        if any(w <= 0 for w in rows[0]):
            raise AlgebraError(
                "first weight row must be strictly positive, got %s" % (rows[0],))
        self.weights = rows

    @classmethod
    def standard(cls, n: int) -> "Grading":
        return cls([[1] * n])

    @classmethod
    def fine(cls, n: int) -> "Grading":
        """Total degree followed by the degree in each variable separately."""
        rows = [[1] * n]
        for i in range(n):
            rows.append([1 if j == i else 0 for j in range(n)])
        return cls(rows)

    @property
    def nvars(self) -> int:
        return len(self.weights[0])

    @property
    def rank(self) -> int:
        return len(self.weights)

    def degree(self, e: Exponent) -> int:
        return sum(w * a for w, a in zip(self.weights[0], e))

    def multidegree(self, e: Exponent) -> tuple:
        return tuple(sum(w * a for w, a in zip(row, e)) for row in self.weights)

    def total_weight(self) -> tuple:
        """Sum of the multidegrees of all variables."""
        return tuple(sum(row) for row in self.weights)

    def __eq__(self, other):
        return isinstance(other, Grading) and other.weights == self.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"Grading({[list(r) for r in self.weights]})"


class Ring:
    """Polynomial ring F_p[x_1..x_n] with a (multi)grading."""

    def __init__(self, p: int, variables: Sequence[str], grading: Grading | None = None,
                 max_degree: int = DEFAULT_MAX_DEGREE):
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        variables = tuple(variables)
        if not variables:
            raise AlgebraError("a ring needs at least one variable")
        if any(not v for v in variables) or len(set(variables)) != len(variables):
            raise AlgebraError(f"variable names must be distinct and nonempty: {variables}")
        self.variables = variables
        self.grading = grading if grading is not None else Grading.standard(len(variables))
        if self.grading.nvars != len(variables):
            raise AlgebraError("grading has %d columns for %d variables"
                               % (self.grading.nvars, len(variables)))
        self.max_degree = max_degree
        self._key = (self.field.p, self.variables, self.grading.weights)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return isinstance(other, Ring) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "F_%d[%s]" % (self.p, ",".join(self.variables))

    # -- element constructors -------------------------------------------

    def poly(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]]) -> "Polynomial":
        items = terms.items() if isinstance(terms, Mapping) else terms
        p = self.p
        out: dict = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != self.nvars:
                raise AlgebraError(f"exponent {e} has wrong arity for {self}")
            if any(a < 0 for a in e):
                raise AlgebraError(f"negative exponent in {e}")
            c = (out.get(e, 0) + c) % p
            if c:
                out[e] = c
            else:
                out.pop(e, None)
        for e in out:
            self.check_degree(e)
        return Polynomial._raw(self, out)

    def monomial(self, e: Exponent, c: int = 1) -> "Polynomial":
        return self.poly({tuple(e): c})

    def constant(self, c: int) -> "Polynomial":
        return self.poly({self.unit_exponent: c})

    @property
    def unit_exponent(self) -> Exponent:
        return (0,) * self.nvars

    @property
    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def var(self, which: int | str) -> "Polynomial":
        i = self.variables.index(which) if isinstance(which, str) else which
        e = [0] * self.nvars
        e[i] = 1
        return self.monomial(tuple(e))

    def parse(self, text: str) -> "Polynomial":
        from fsplit.parsing import parse_polynomial
        return parse_polynomial(text, self)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            check_same_ring(self, value.ring)
            return value
        if isinstance(value, int):
            return self.constant(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    # -- degrees --------------------------------------------------------

    def degree(self, e: Exponent) -> int:
        return self.grading.degree(e)

    def multidegree(self, e: Exponent) -> tuple:
        return self.grading.multidegree(e)

    def check_degree(self, e: Exponent) -> None:
        if sum(e) > self.max_degree:
            raise DegreeOverflowError(
                "monomial of total degree %d exceeds the cap %d" % (sum(e), self.max_degree))

    def grevlex_key(self, e: Exponent) -> tuple:
        """Sort key for weighted graded reverse lexicographic order (larger is bigger)."""
        return (self.grading.degree(e), tuple(-a for a in reversed(e)))

    def extend(self, name: str, weight: int = 1) -> "Ring":
        """The ring with one extra variable placed first (for elimination)."""
        if name in self.variables:
            raise AlgebraError(f"variable {name} already present")
        rows = [[weight] + list(self.grading.weights[0])]
        rows += [[0] + list(r) for r in self.grading.weights[1:]]
        return Ring(self.field, (name,) + self.variables, Grading(rows), self.max_degree)


def check_same_ring(a: Ring, b: Ring) -> None:
    if a != b:
        raise RingMismatchError(f"ring mismatch: {a} vs {b}")


class Polynomial:
    """Immutable element of a :class:`Ring`."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Exponent, int] | None = None):
        self.ring = ring
        self._terms = ring.poly(terms or {})._terms
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.sorted_terms())

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, e: Exponent) -> int:
        return self._terms.get(tuple(e), 0)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in descending grevlex order."""
        key = self.ring.grevlex_key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def monomials(self) -> list[Exponent]:
        return [e for e, _ in self.sorted_terms()]

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            check_same_ring(self.ring, other.ring)
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial._raw(self.ring, {e: p - c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a natural number")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero
        return Polynomial._raw(self.ring, {e: (a * c) % p for e, a in self._terms.items()})

    def mul_term(self, m: Exponent, c: int = 1) -> "Polynomial":
        """Multiply by the single term c*x^m."""
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero
        out = {}
        for e, a in self._terms.items():
            f = tuple(x + y for x, y in zip(e, m))
            out[f] = (a * c) % p
        if out:
            self.ring.check_degree(max(out, key=sum))
        return Polynomial._raw(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- degree data ----------------------------------------------------

    def degree(self) -> int:
        """Maximal distinguished degree of a term; -1 for zero."""
        if not self._terms:
            return -1
        return max(self.ring.degree(e) for e in self._terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def multidegrees(self) -> set[tuple]:
        return {self.ring.multidegree(e) for e in self._terms}

    def is_homogeneous(self, multigraded: bool = False) -> bool:
        if multigraded:
            return len(self.multidegrees()) <= 1
        return len({self.ring.degree(e) for e in self._terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        parts: dict[int, dict] = {}
        for e, c in self._terms.items():
            parts.setdefault(self.ring.degree(e), {})[e] = c
        return {d: Polynomial._raw(self.ring, t) for d, t in sorted(parts.items())}

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self}, {self.ring!r})"


def format_monomial(e: Exponent, names: Sequence[str]) -> str:
    parts = []
    for a, name in zip(e, names):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    """Render in the input grammar, terms in descending grevlex order."""
    if not f:
        return "0"
    out = []
    for e, c in f.sorted_terms():
        mono = format_monomial(e, f.ring.variables)
        if not mono:
            out.append(str(c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{c}*{mono}")
    return " + ".join(out)


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    check_same_ring(f.ring, g.ring)
    p = f.ring.p
    if len(f._terms) < len(g._terms):
        f, g = g, f
    out = dict(f._terms)
    for e, c in g._terms.items():
        c = (out.get(e, 0) + c) % p
        if c:
            out[e] = c
        else:
            del out[e]
    return Polynomial._raw(f.ring, out)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    check_same_ring(f.ring, g.ring)
    ring = f.ring
    p = ring.p
    out: dict = {}
    for e1, c1 in f._terms.items():
        for e2, c2 in g._terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = (out.get(e, 0) + c1 * c2) % p
    out = {e: c for e, c in out.items() if c}
    if out:
        ring.check_degree(max(out, key=sum))
    return Polynomial._raw(ring, out)


def frobenius(f: Polynomial) -> Polynomial:
    """f^p, computed termwise since scalars in F_p are Frobenius-fixed."""
    p = f.ring.p
    out = {tuple(p * a for a in e): c for e, c in f._terms.items()}
    if out:
        f.ring.check_degree(max(out, key=sum))
    return Polynomial._raw(f.ring, out)


def homogeneous_component(f: Polynomial, deg) -> Polynomial:
    """Terms of ``f`` of the given degree.

    ``deg`` is either an int (distinguished grading) or a full
    multidegree vector with one entry per weight row.
    """
    ring = f.ring
    if isinstance(deg, int):
        pick = {e: c for e, c in f._terms.items() if ring.degree(e) == deg}
    else:
        deg = tuple(deg)
        if len(deg) != ring.grading.rank:
            raise AlgebraError("multidegree %s does not match grading rank %d"
                               % (deg, ring.grading.rank))
        pick = {e: c for e, c in f._terms.items() if ring.multidegree(e) == deg}
    return Polynomial._raw(ring, pick)


def exponents_of_degree(weights: Sequence[int], deg: int) -> list[Exponent]:
    """All exponent vectors e >= 0 with sum(w_i e_i) == deg (unordered)."""
    n = len(weights)
    out: list = []

    def rec(i, remaining, acc):
        if i == n - 1:
            w = weights[i]
            if remaining % w == 0:
                out.append(tuple(acc) + (remaining // w,))
            return
        w = weights[i]
        for a in range(remaining // w + 1):
            acc.append(a)
            rec(i + 1, remaining - a * w, acc)
            acc.pop()

    if deg < 0:
        return []
    rec(0, deg, [])
    return out


def graded_piece_basis(ring: Ring, deg: int) -> list[Exponent]:
    """Monomial basis of R_deg in descending grevlex order."""
    if deg < 0:
        return []
    basis = exponents_of_degree(ring.grading.weights[0], deg)
    return sorted(basis, key=ring.grevlex_key, reverse=True)


def bounded_exponents(n: int, bound: int) -> Iterator[Exponent]:
    """All exponent vectors with every entry in [0, bound]."""
    return product(range(bound + 1), repeat=n)


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def sub_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))
