"""Exact multivariate polynomials over QQ.

Polynomials are sympy ``PolyElement`` objects living in a ``PolyRing`` over
``QQ``. A :class:`VarTable` owns exactly one such ring (sympy caches rings by
symbols, domain and order), so two polynomials share a variable table iff
they share a ring. The sparse dict representation keyed by exponent tuples is
canonical: equal polynomials compare equal and print identically.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy import QQ, Symbol
from sympy.polys.rings import ring as make_ring

from polyaccess.core.exceptions import PolyaccessError, VarTableError, VarTableMismatch

logger = logging.getLogger(__name__)

# monomial order names used in files and flags -> sympy order names
ORDERS = {
    "degrevlex": "grevlex",
    "lex": "lex",
    "deglex": "grlex",
}

RESERVED_NAMES = frozenset({"sin", "cos"})
NAME_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class VarTable:
    """Ordered variable names plus the active monomial order."""

    names: tuple
    order: str = "degrevlex"

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise VarTableError("a variable table needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise VarTableError(f"duplicate variable names in {self.names}")
        for name in self.names:
            if not NAME_PATTERN.match(name) or name in RESERVED_NAMES:
                raise VarTableError(f"invalid variable name {name!r}")
        if self.order not in ORDERS:
            raise VarTableError(
                f"unknown monomial order {self.order!r}, use one of {sorted(ORDERS)}"
            )

    @property
    def n(self) -> int:
        return len(self.names)

    @cached_property
    def symbols(self):
        return tuple(Symbol(name) for name in self.names)

    @cached_property
    def ring(self):
        return make_ring(self.symbols, QQ, ORDERS[self.order])[0]

    @property
    def zero(self):
        return self.ring.zero

    @property
    def one(self):
        return self.ring.one

    def index(self, name) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise VarTableError(f"unknown variable {name!r}") from None

    def gen(self, var):
        """Return the generator for a variable name or index."""
        if isinstance(var, str):
            var = self.index(var)
        return self.ring.gens[var]

    def const(self, value):
        return self.ring.ground_new(to_qq(value))

    def with_order(self, order: str) -> "VarTable":
        return VarTable(self.names, order)

    def convert(self, p):
        """Move ``p`` from another table with the same variable names."""
        if p.ring == self.ring:
            return p
        source = [str(s) for s in p.ring.symbols]
        if sorted(source) != sorted(self.names):
            raise VarTableMismatch(f"cannot convert between {source} and {list(self.names)}")
        positions = [source.index(name) for name in self.names]
        return self.ring.from_dict(
            {tuple(monom[i] for i in positions): coeff for monom, coeff in p.items()}
        )

    def owns(self, p) -> bool:
        return p.ring == self.ring

    def check(self, *polys) -> None:
        for p in polys:
            if p.ring != self.ring:
                raise VarTableMismatch(
                    f"polynomial over {p.ring.symbols} used with table {self.names}"
                )


def to_qq(value):
    """Convert int, Fraction, str or QQ element to a QQ element."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        value = Fraction(value)
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _same_ring(p, q):
    if p.ring != q.ring:
        raise VarTableMismatch(
            f"operands over different variable tables: {p.ring.symbols} vs {q.ring.symbols}"
        )


def add(p, q):
    _same_ring(p, q)
    return p + q


def sub(p, q):
    _same_ring(p, q)
    return p - q


def mul(p, q):
    _same_ring(p, q)
    return p * q


def partial_derivative(p, v):
    """Formal partial derivative with respect to variable index ``v``."""
    if not 0 <= v < p.ring.ngens:
        raise VarTableError(f"variable index {v} out of range for {p.ring.ngens} variables")
    return p.diff(p.ring.gens[v])


def evaluate_qq(p, point):
    """Evaluate at a point of QQ elements, returning a QQ element."""
    if len(point) != p.ring.ngens:
        raise VarTableMismatch(
            f"point has {len(point)} coordinates, polynomial has {p.ring.ngens} variables"
        )
    if not p:
        return QQ.zero
    return p(*point)


def evaluate(p, point) -> Fraction:
    """Exact value of ``p`` at ``point`` (ints, Fractions or QQ elements)."""
    return from_qq(evaluate_qq(p, [to_qq(a) for a in point]))


def squarefree_part(p):
    """Product of the distinct irreducible factors of ``p``, made monic.

    Computed as ``p / gcd(p, dp/dx_1, ..., dp/dx_n)``.
    """
    if not p:
        raise PolyaccessError("squarefree part of the zero polynomial")
    g = p
    for x in p.ring.gens:
        g = g.gcd(p.diff(x))
    return p.exquo(g).monic()


def total_degree(p) -> int:
    """Total degree; -1 for the zero polynomial."""
    if not p:
        return -1
    return max(sum(monom) for monom in p.monoms())


def is_monomial(p) -> bool:
    return len(p) == 1


def monomial_content(p):
    """Split ``p`` as ``x^content * rest``; ``content`` is the exponentwise minimum."""
    if not p:
        raise PolyaccessError("monomial content of the zero polynomial")
    content = tuple(map(min, zip(*p.monoms())))
    rest = p.ring.from_dict(
        {tuple(e - c for e, c in zip(monom, content)): coeff for monom, coeff in p.items()}
    )
    return content, rest


def terms(p):
    """Canonical term list: (Fraction, exponents), descending in the ring order."""
    return [(from_qq(coeff), monom) for monom, coeff in p.terms()]


def _format_monomial(monom, names):
    factors = []
    for name, exp in zip(names, monom):
        if exp == 1:
            factors.append(name)
        elif exp > 1:
            factors.append(f"{name}^{exp}")
    return "*".join(factors)


def format_poly(p) -> str:
    """Canonical text in the polynomial grammar, terms in the ring order."""
    if not p:
        return "0"
    names = [str(s) for s in p.ring.symbols]
    parts = []
    for coeff, monom in terms(p):
        sign = "-" if coeff < 0 else "+"
        coeff = abs(coeff)
        body = _format_monomial(monom, names)
        if not body:
            text = str(coeff)
        elif coeff == 1:
            text = body
        else:
            text = f"{coeff}*{body}"
        parts.append((sign, text))
    first_sign, first_text = parts[0]
    out = ("-" if first_sign == "-" else "") + first_text
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out
