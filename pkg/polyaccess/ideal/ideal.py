"""Polynomial ideals with a cached reduced Gröbner basis."""

import logging
from dataclasses import dataclass
from functools import cached_property

from sympy.polys.groebnertools import groebner as sympy_groebner

from polyaccess.core.exceptions import VarTableMismatch
from polyaccess.poly.core import VarTable, format_poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Ideal:
    """The ideal generated by ``generators`` in the ring of ``table``.

    ``basis`` is the reduced Gröbner basis for the table's monomial order:
    monic, sorted by leading monomial descending. Two ideals over one table
    are equal iff their bases are identical.
    """

    table: VarTable
    generators: tuple

    def __post_init__(self):
        gens = tuple(g for g in self.generators if g)
        self.table.check(*gens)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def unit(cls, table):
        return cls(table, (table.one,))

    @classmethod
    def zero(cls, table):
        return cls(table, ())

    @cached_property
    def basis(self) -> tuple:
        if not self.generators:
            return ()
        ring = self.table.ring
        G = sympy_groebner(list(self.generators), ring, method="buchberger")
        G = [g.monic() for g in G if g]
        return tuple(sorted(G, key=lambda g: ring.order(g.LM), reverse=True))

    def reduced(self) -> "Ideal":
        """Same ideal, generated by its reduced basis."""
        return Ideal(self.table, self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_proper(self) -> bool:
        return not (len(self.basis) == 1 and self.basis[0] == self.table.one)

    @property
    def is_monomial(self) -> bool:
        return all(len(g) == 1 for g in self.basis)

    def _check(self, other):
        if self.table != other.table:
            raise VarTableMismatch(
                f"ideals over different tables: {self.table.names} vs {other.table.names}"
            )

    def normal_form(self, p):
        self.table.check(p)
        if not self.basis:
            return p
        return p.rem(list(self.basis))

    def contains(self, p) -> bool:
        return not self.normal_form(p)

    __contains__ = contains

    def contains_ideal(self, other) -> bool:
        self._check(other)
        return all(self.contains(g) for g in other.generators)

    def equals(self, other) -> bool:
        self._check(other)
        return self.basis == other.basis

    def extend(self, polys) -> "Ideal":
        return Ideal(self.table, self.generators + tuple(polys))

    def sum(self, other) -> "Ideal":
        self._check(other)
        return self.extend(other.generators)

    def intersect(self, other) -> "Ideal":
        """``I ∩ J`` by eliminating ``t`` from ``t*I + (1-t)*J`` in lex order."""
        self._check(other)
        if self.is_zero or other.is_zero:
            return Ideal.zero(self.table)
        if not self.is_proper:
            return other.reduced()
        if not other.is_proper:
            return self.reduced()
        aux = "t"
        while aux in self.table.names:
            aux += "_"
        big = VarTable((aux, *self.table.names), "lex")
        t = big.gen(0)

        def lift(p):
            return big.ring.from_dict({(0, *m): c for m, c in p.items()})

        gens = [t * lift(g) for g in self.generators]
        gens += [(big.one - t) * lift(g) for g in other.generators]
        G = sympy_groebner(gens, big.ring, method="buchberger")
        ring = self.table.ring
        kept = [ring.from_dict({m[1:]: c for m, c in g.items()}) for g in G if g.degree(0) <= 0]
        return Ideal(self.table, tuple(kept)).reduced()

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.table == other.table and self.basis == other.basis

    def __hash__(self):
        return hash((self.table, self.basis))

    def format(self, gens=None) -> str:
        gens = self.basis if gens is None else gens
        return "⟨" + ", ".join(format_poly(g) for g in gens) + "⟩" if gens else "⟨0⟩"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Ideal({self.format(self.generators)})"


def groebner_basis(ideal: Ideal) -> Ideal:
    """Return ``ideal`` with its reduced Gröbner basis computed."""
    ideal.basis
    return ideal


def member(p, ideal: Ideal) -> bool:
    return ideal.contains(p)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    return a.equals(b)


def power_certificate(p, ideal: Ideal, max_power: int):
    """Smallest ``k <= max_power`` with ``p^k`` in ``ideal``, else None."""
    power = ideal.table.one
    for k in range(1, max_power + 1):
        power = power * p
        if ideal.contains(power):
            return k
    return None
