"""Immersion maps ``z = T(x)`` lifting analytic systems to polynomial ones.

Entries after the identity block are ``sin(v)``, ``cos(v)``, ``1/P`` or a
polynomial, with ``v`` a source variable and ``P`` a polynomial in the source
variables and the declared sine/cosine atoms. Rewriting an analytic
expression replaces each atom by its target variable and clears reciprocal
denominators against the declared ``1/P`` entries.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

import sympy

from polyaccess.core.exceptions import ClosureViolation, ImmersionError
from polyaccess.ideal.ideal import Ideal
from polyaccess.poly.core import VarTable, format_poly

logger = logging.getLogger(__name__)

TRIG = (sympy.sin, sympy.cos)

SIN = "sin"
COS = "cos"
RECIPROCAL = "reciprocal"
POLYNOMIAL = "polynomial"
IDENTITY = "identity"


@dataclass(frozen=True)
class AnalyticSystem:
    """Control-affine system whose components are sympy expressions."""

    source: tuple
    drift: tuple
    inputs: tuple  # ((label, components), ...)
    drift_label: str = "f"

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "drift", tuple(sympy.sympify(c) for c in self.drift))
        object.__setattr__(
            self,
            "inputs",
            tuple((label, tuple(sympy.sympify(c) for c in comps)) for label, comps in self.inputs),
        )
        n = len(self.source)
        for label, comps in ((self.drift_label, self.drift), *self.inputs):
            if len(comps) != n:
                raise ImmersionError(f"field {label} has {len(comps)} components, expected {n}")
        if not self.inputs:
            raise ImmersionError("a system needs at least one input field")

    @property
    def symbols(self):
        return tuple(sympy.Symbol(name) for name in self.source)

    @property
    def fields(self):
        return ((self.drift_label, self.drift), *self.inputs)

    def named(self, label):
        for name, comps in self.fields:
            if name == label:
                return comps
        raise KeyError(label)

    def bracket(self, X, Y):
        """Source bracket ``[X, Y]`` of two component tuples."""
        syms = self.symbols

        def derivative(components, expr):
            return lie_derivative_expr(components, expr, syms)

        return tuple(sympy.expand(derivative(X, y) - derivative(Y, x)) for x, y in zip(X, Y))


def lie_derivative_expr(components, expr, symbols):
    return sum(sympy.diff(expr, s) * c for s, c in zip(symbols, components))


@dataclass(frozen=True)
class ImmersionMap:
    source: tuple
    target: VarTable
    entries: tuple
    declared: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "entries", tuple(sympy.sympify(e) for e in self.entries))
        object.__setattr__(self, "declared", tuple(self.declared))
        n, n_star = len(self.source), self.target.n
        if n > n_star:
            raise ImmersionError(f"{n} source variables but only {n_star} target variables")
        if len(self.entries) != n_star:
            raise ImmersionError(f"{len(self.entries)} map entries for {n_star} target variables")
        self.target.check(*self.declared)
        for i, name in enumerate(self.source):
            if self.entries[i] != sympy.Symbol(name):
                raise ImmersionError(
                    f"entry {self.target.names[i]} must be the source variable {name}"
                )
        self.kinds  # classify every entry now
        self._check_relations()

    @property
    def n(self):
        return len(self.source)

    @cached_property
    def source_symbols(self):
        return tuple(sympy.Symbol(name) for name in self.source)

    @cached_property
    def kinds(self) -> tuple:
        kinds = []
        syms = set(self.source_symbols)
        seen = {}
        for j, entry in enumerate(self.entries):
            if j < self.n:
                kinds.append(IDENTITY)
                continue
            if entry.func in TRIG and len(entry.args) == 1 and entry.args[0] in syms:
                kind = SIN if entry.func is sympy.sin else COS
            elif entry.is_Pow and entry.exp == -1:
                kind = RECIPROCAL
            elif entry.free_symbols <= syms and entry.is_polynomial(*self.source_symbols):
                kind = POLYNOMIAL
            else:
                raise ImmersionError(f"unsupported map entry {self.target.names[j]} = {entry}")
            if entry in seen:
                raise ImmersionError(f"entry {entry} declared twice")
            seen[entry] = j
            kinds.append(kind)
        return tuple(kinds)

    @cached_property
    def target_symbols(self):
        return self.target.symbols

    @cached_property
    def _atom_map(self) -> dict:
        """sin/cos atoms and source symbols -> target symbols."""
        mapping = {}
        for j, kind in enumerate(self.kinds):
            if kind in (SIN, COS):
                mapping[self.entries[j]] = self.target_symbols[j]
        return mapping

    @cached_property
    def _rename(self) -> dict:
        return dict(zip(self.source_symbols, self.target_symbols))

    def _replace_atoms(self, expr):
        expr = sympy.sympify(expr).xreplace(self._atom_map)
        return expr.xreplace(self._rename)

    @cached_property
    def reciprocals(self) -> tuple:
        """``(P_hat, z)`` for every ``1/P`` entry, P_hat over target symbols."""
        out = []
        for j, kind in enumerate(self.kinds):
            if kind != RECIPROCAL:
                continue
            base = sympy.expand(self._replace_atoms(self.entries[j].base))
            if base.has(*TRIG) or not base.is_polynomial(*self.target_symbols):
                raise ImmersionError(
                    f"denominator of {self.target.names[j]} uses undeclared transcendentals: {base}"
                )
            out.append((base, self.target_symbols[j]))
        return tuple(out)

    @cached_property
    def implied_relations(self) -> tuple:
        ring = self.target.ring
        out = []
        by_arg = {}
        for j, kind in enumerate(self.kinds):
            if kind in (SIN, COS):
                by_arg.setdefault(self.entries[j].args[0], {})[kind] = self.target_symbols[j]
            elif kind == POLYNOMIAL:
                P = self._replace_atoms(self.entries[j])
                out.append(ring.from_expr(self.target_symbols[j] - P))
        for pair in by_arg.values():
            if SIN in pair and COS in pair:
                out.append(ring.from_expr(pair[SIN] ** 2 + pair[COS] ** 2 - 1))
        for base, z in self.reciprocals:
            out.append(ring.from_expr(sympy.expand(z * base - 1)))
        return tuple(out)

    @cached_property
    def relations(self) -> tuple:
        out = []
        for r in (*self.declared, *self.implied_relations):
            r = r.monic()
            if r not in out:
                out.append(r)
        return tuple(out)

    @cached_property
    def relation_ideal(self) -> Ideal:
        return Ideal(self.target, self.relations)

    def substitute(self, poly):
        """Replace every target variable of ``poly`` by its entry."""
        expr = poly.as_expr() if hasattr(poly, "as_expr") else sympy.sympify(poly)
        return expr.xreplace(dict(zip(self.target_symbols, self.entries)))

    def _check_relations(self):
        for r in self.declared:
            if sympy.simplify(self.substitute(r)) != 0:
                raise ImmersionError(f"relation {format_poly(r)} does not vanish on the image of T")

    def rewrite(self, expr):
        """Rewrite an analytic expression as a polynomial in the target variables."""
        expr = self._replace_atoms(expr)
        for base, z in self.reciprocals:
            expr = expr.replace(
                lambda a, base=base: a.is_Pow and a.base == base and a.exp.is_Integer and a.exp < 0,
                lambda a, z=z: z ** (-a.exp),
            )
        num, den = sympy.fraction(sympy.together(expr))
        num, den = sympy.expand(num), sympy.expand(den)
        for base, z in self.reciprocals:
            while not den.is_number:
                quotient, remainder = sympy.div(den, base, *self.target_symbols)
                if remainder != 0:
                    break
                den, num = sympy.expand(quotient), num * z
        if not den.is_number:
            raise ClosureViolation(f"denominator {den} is not a declared reciprocal", residue=den)
        result = sympy.expand(num / den)
        if result.has(*TRIG):
            residue = next(iter(result.atoms(*TRIG)))
            raise ClosureViolation(f"undeclared transcendental {residue}", residue=residue)
        try:
            return self.target.ring.from_expr(result)
        except ValueError:
            raise ClosureViolation(f"expression {result} is not polynomial in the target variables", residue=result) from None

    def evaluate(self, point) -> tuple:
        """Exact image ``T(x)`` as sympy numbers."""
        subs = dict(zip(self.source_symbols, (sympy.sympify(a) for a in point)))
        return tuple(entry.xreplace(subs) for entry in self.entries)
