"""Radicals for the ideal shapes the analysis meets.

``real_radical_restricted`` decides the real radical only for inputs it can
certify: monomial ideals, principal ideals whose squarefree factors are graph
factors or sums of even powers, and sums of those whose result passes an
even-power membership certificate. Anything else yields :class:`Unsupported`.
"""

import logging
from dataclasses import dataclass

from polyaccess.conf import settings
from polyaccess.core.exceptions import PolyaccessError
from polyaccess.ideal.ideal import Ideal
from polyaccess.poly.core import format_poly, monomial_content, squarefree_part, total_degree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Unsupported:
    """Marker returned when the real radical cannot be certified."""

    reason: str

    def __str__(self):
        return f"unsupported: {self.reason}"


def radical_monomial(ideal: Ideal) -> Ideal:
    """Radical of a monomial ideal: squarefree part of each generator."""
    for g in ideal.generators:
        if len(g) != 1:
            raise PolyaccessError(f"not a monomial generator: {format_poly(g)}")
    return Ideal(ideal.table, tuple(squarefree_part(g) for g in ideal.generators)).reduced()


def _monomial_of(table, monom):
    return table.ring.term_new(monom, table.ring.domain.one)


def _is_even_power_sum(p) -> bool:
    signs = {c > 0 for c in p.coeffs()}
    return len(signs) == 1 and all(e % 2 == 0 for m in p.monoms() for e in m)


def _is_graph_factor(p) -> bool:
    """True if ``p = c*x_i + q`` with ``q`` free of ``x_i`` and ``c`` a constant."""
    n = p.ring.ngens
    for i in range(n):
        unit = tuple(1 if j == i else 0 for j in range(n))
        involved = [m for m in p.monoms() if m[i] > 0]
        if involved == [unit]:
            return True
    return False


def _principal_real_radical(table, p):
    """Real radical of ``<p>``; None when a factor is out of reach."""
    if p.is_ground:
        return Ideal.unit(table)
    content, rest = monomial_content(p)
    pieces = []
    if any(content):
        pieces.append(radical_monomial(Ideal(table, (_monomial_of(table, content),))))
    _, factors = rest.sqf_list()
    for factor, _ in factors:
        if factor.is_ground:
            continue
        if _is_even_power_sum(factor):
            roots = tuple(_monomial_of(table, tuple(e // 2 for e in m)) for m in factor.monoms())
            pieces.append(radical_monomial(Ideal(table, roots)))
        elif _is_graph_factor(factor):
            pieces.append(Ideal(table, (factor.monic(),)))
        else:
            logger.debug("no real radical rule for factor %s", format_poly(factor))
            return None
    if not pieces:
        return Ideal.unit(table)
    result = pieces[0]
    for piece in pieces[1:]:
        result = result.intersect(piece)
    return result.reduced()


def _even_power_certificate(r, ideal, others, max_power) -> bool:
    """Look for ``r^(2k) + sum s_j^2`` in ``ideal`` with ``s_j`` from ``others``."""
    squares = [s * s for s in others]
    base = r * r
    power = base
    for _ in range(max_power):
        if ideal.contains(power):
            return True
        if squares and ideal.contains(power + sum(squares[1:], squares[0])):
            return True
        for square in squares:
            if ideal.contains(power + square):
                return True
        power = power * base
    return False


def real_radical_restricted(ideal: Ideal, max_power=None):
    """Real radical of ``ideal`` when its shape is supported, else Unsupported."""
    if max_power is None:
        max_power = settings.REAL_RADICAL_MAX_POWER
    table = ideal.table
    basis = ideal.basis
    if not basis:
        return ideal.reduced()
    if not ideal.is_proper:
        return Ideal.unit(table)
    if ideal.is_monomial:
        return radical_monomial(ideal.reduced())
    if len(basis) == 1:
        result = _principal_real_radical(table, basis[0])
        if result is None:
            return Unsupported(f"principal generator {format_poly(basis[0])} has an unsupported factor")
        return result

    pieces = []
    for g in basis:
        piece = _principal_real_radical(table, g)
        if piece is None:
            return Unsupported(f"generator {format_poly(g)} has an unsupported factor")
        pieces.append(piece)
    candidate = Ideal(table, tuple(g for piece in pieces for g in piece.generators)).reduced()
    if not candidate.is_proper:
        # no common real zero
        return Ideal.unit(table)
    if candidate.is_monomial:
        candidate = radical_monomial(candidate)
    elif not all(total_degree(g) == 1 for g in candidate.basis):
        return Unsupported(f"cannot show {candidate} is real radical")
    for r in candidate.basis:
        if ideal.contains(r):
            continue
        others = [s for s in candidate.basis if s != r]
        if not _even_power_certificate(r, ideal, others, max_power):
            return Unsupported(f"no even-power certificate for {format_poly(r)}")
    logger.debug("real radical of %s certified as %s", ideal, candidate)
    return candidate
