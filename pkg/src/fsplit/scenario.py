"""Scenario files: one declaration per line.

::

    # comments start with '#'
    ring p=2 vars=x,y weights=1,1;1,0     # weights optional, rows split by ';'
    splitting standard                    # or: splitting g = x*y + x^2
    ideal I = x*y                         # empty right-hand side = zero ideal
    option degree-bound = 4

Every polynomial uses the grammar of :mod:`fsplit.parsing`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

from fsplit.algebra import AlgebraError, Grading, Ring
from fsplit.ideal import Ideal
from fsplit.parsing import ParseError
from fsplit.splitting import Splitting, standard_splitting, trace

KNOWN_OPTIONS = ("degree-bound", "N", "hilbert", "seeds", "include-zero",
                 "include-unit", "graded-bound")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


class ScenarioError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass
class Scenario:
    p: int
    variables: tuple
    weights: tuple | None = None
    splitting_text: str = "standard"
    ideals: dict = field(default_factory=dict)
    options: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, Scenario):
            return NotImplemented
        return (self.p, self.variables, self.weights, self.splitting_text,
                self.ideals, self.options) == (other.p, other.variables, other.weights,
                                               other.splitting_text, other.ideals,
                                               other.options)

    @cached_property
    def ring(self) -> Ring:
        grading = Grading(self.weights) if self.weights else None
        return Ring(self.p, self.variables, grading)

    @cached_property
    def splitting(self) -> Splitting:
        if self.splitting_text == "standard":
            return standard_splitting(self.ring)
        return Splitting(self.ring.parse(self.splitting_text))

    def ideal(self, name: str) -> Ideal:
        if name not in self.ideals:
            raise KeyError(f"no ideal named {name!r}")
        return Ideal.parse(self.ring, self.ideals[name])

    def option(self, name: str, default=None):
        return self.options.get(name, default)


def _split_at(line: str, sep: str):
    head, _, tail = line.partition(sep)
    return head.strip(), tail.strip()


def _col(raw: str, fragment: str) -> int:
    idx = raw.find(fragment)
    return idx + 1 if idx >= 0 else 1


def parse_scenario(text: str) -> Scenario:
    ring_decl = None
    splitting_decl = None
    ideals: dict = {}
    options: dict = {}
    ring = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "ring":
            if ring_decl is not None:
                raise ScenarioError("duplicate ring declaration", lineno)
            ring_decl = _parse_ring(rest, raw, lineno)
            p, variables, weights = ring_decl
            try:
                ring = Ring(p, variables, Grading(weights) if weights else None)
            except AlgebraError as exc:
                raise ScenarioError(str(exc), lineno, _col(raw, rest)) from None
        elif word == "splitting":
            if ring is None:
                raise ScenarioError("splitting declared before ring", lineno)
            if splitting_decl is not None:
                raise ScenarioError("duplicate splitting declaration", lineno)
            splitting_decl = _parse_splitting(rest, raw, lineno, ring)
        elif word == "ideal":
            if ring is None:
                raise ScenarioError("ideal declared before ring", lineno)
            name, body = _split_at(rest, "=")
            if not _NAME.match(name):
                raise ScenarioError(f"bad ideal name {name!r}", lineno, _col(raw, name))
            if name in ideals:
                raise ScenarioError(f"duplicate ideal {name!r}", lineno, _col(raw, name))
            gens = []
            if body:
                offset = raw.find("=") + 1
                for piece in body.split(","):
                    piece = piece.strip()
                    if not piece:
                        raise ScenarioError("empty generator", lineno, offset + 1)
                    gens.append(str(_parse_poly(piece, raw, lineno, ring)))
            ideals[name] = tuple(gens)
        elif word == "option":
            key, value = _split_at(rest, "=")
            if key not in KNOWN_OPTIONS:
                raise ScenarioError(f"unknown option {key!r}", lineno, _col(raw, key))
            options[key] = value
        else:
            raise ScenarioError(f"unknown declaration {word!r}", lineno, _col(raw, word))
    if ring_decl is None:
        raise ScenarioError("missing ring declaration", 1)
    p, variables, weights = ring_decl
    return Scenario(p, variables, weights, splitting_decl or "standard", ideals, options)


def _parse_ring(rest: str, raw: str, lineno: int):
    fields = {}
    for tok in rest.split():
        key, sep, value = tok.partition("=")
        if not sep or key not in ("p", "vars", "weights"):
            raise ScenarioError(f"bad ring field {tok!r}", lineno, _col(raw, tok))
        fields[key] = (value, _col(raw, tok))
    if "p" not in fields or "vars" not in fields:
        raise ScenarioError("ring needs p=... and vars=...", lineno)
    value, col = fields["p"]
    try:
        p = int(value)
    except ValueError:
        raise ScenarioError(f"p must be an integer, got {value!r}", lineno, col) from None
    variables = tuple(v.strip() for v in fields["vars"][0].split(","))
    bad = [v for v in variables if not _NAME.match(v)]
    if bad:
        raise ScenarioError(f"bad variable name {bad[0]!r}", lineno, fields["vars"][1])
    weights = None
    if "weights" in fields:
        value, col = fields["weights"]
        try:
            weights = tuple(tuple(int(w) for w in row.split(",")) for row in value.split(";"))
        except ValueError:
            raise ScenarioError(f"bad weights {value!r}", lineno, col) from None
    return p, variables, weights


def _parse_poly(text: str, raw: str, lineno: int, ring: Ring):
    try:
        return ring.parse(text)
    except ParseError as exc:
        raise ScenarioError(exc.message, lineno, _col(raw, text) + exc.pos) from None


def _parse_splitting(rest: str, raw: str, lineno: int, ring: Ring) -> str:
    if rest == "standard":
        return "standard"
    key, body = _split_at(rest, "=")
    if key != "g" or not body:
        raise ScenarioError("expected 'splitting standard' or 'splitting g = <poly>'",
                            lineno, _col(raw, rest))
    g = _parse_poly(body, raw, lineno, ring)
    t = trace(g)
    if t != ring.one:
        raise ScenarioError(f"premultiplier is not a splitting: Tr(g) = {t}",
                            lineno, _col(raw, body))
    return str(g)


def serialize_scenario(s: Scenario) -> str:
    head = f"ring p={s.p} vars={','.join(s.variables)}"
    if s.weights:
        head += " weights=" + ";".join(",".join(str(w) for w in row) for row in s.weights)
    lines = [head]
    if s.splitting_text == "standard":
        lines.append("splitting standard")
    else:
        lines.append(f"splitting g = {s.splitting_text}")
    for name, gens in s.ideals.items():
        lines.append(f"ideal {name} = {', '.join(gens)}".rstrip())
    for key, value in s.options.items():
        lines.append(f"option {key} = {value}")
    return "\n".join(lines) + "\n"

