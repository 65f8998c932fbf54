"""Numeric cross-check of a singular ideal against bracket-matrix ranks."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import sympy
from numpy.random import default_rng

from polyaccess.conf import settings
from polyaccess.lie.fields import SystemSpec
from polyaccess.minors.matrix import FieldMatrix, numeric_rank
from polyaccess.minors.rank import random_point
from polyaccess.module.chain import stabilize_chain
from polyaccess.poly.core import evaluate, to_qq

logger = logging.getLogger(__name__)


@dataclass
class SampleDiagnostics:
    points: int = 0
    on_variety: int = 0
    mismatches: list = field(default_factory=list)
    depth: int = None
    skipped: str = None

    @property
    def ok(self) -> bool:
        return self.skipped is None and not self.mismatches

    def to_dict(self):
        return {
            "points": self.points,
            "on_variety": self.on_variety,
            "mismatches": [list(map(str, p)) for p in self.mismatches],
            "depth": self.depth,
            "skipped": self.skipped,
        }


def _rational_roots(g, var, point):
    """Rational values of coordinate ``var`` putting ``point`` on ``g = 0``."""
    ring = g.ring
    others = [(ring.gens[j], to_qq(a)) for j, a in enumerate(point) if j != var]
    h = g.subs(others) if others else g
    if not h:
        return [point[var]]
    symbol = ring.symbols[var]
    poly = sympy.Poly(h.as_expr(), symbol, domain="QQ")
    if poly.degree() < 1:
        return []
    return [Fraction(int(r.p), int(r.q)) for r in poly.ground_roots()]


def _on_variety(gens, point) -> bool:
    return all(evaluate(g, point) == 0 for g in gens)


def _project(gens, point, rng):
    """Move one coordinate of ``point`` onto the variety of ``gens`` if a rational root allows it."""
    point = list(point)
    fallback = None
    for var in rng.permutation(len(point)):
        g = gens[int(rng.integers(len(gens)))]
        roots = _rational_roots(g, int(var), point)
        for root in rng.permutation(len(roots)):
            candidate = list(point)
            candidate[int(var)] = roots[int(root)]
            if _on_variety(gens, candidate):
                return tuple(candidate)
            fallback = fallback or tuple(candidate)
    return fallback or tuple(point)


def _secant(gens, base, rng):
    """Second rational intersection of a random line through ``base`` with the variety."""
    n = len(base)
    direction = [int(a) for a in rng.integers(-3, 4, size=n)]
    if not any(direction):
        direction[int(rng.integers(n))] = 1
    t = sympy.Symbol("t")
    line = {
        symbol: sympy.Rational(Fraction(a).numerator, Fraction(a).denominator) + d * t
        for symbol, a, d in zip(gens[0].ring.symbols, base, direction)
    }
    restricted = [sympy.Poly(g.as_expr().xreplace(line), t, domain="QQ") for g in gens]
    restricted = [r for r in restricted if not r.is_zero]
    if restricted:
        common = restricted[0]
        for r in restricted[1:]:
            common = common.gcd(r)
        roots = [r for r in common.ground_roots() if r != 0]
        if not roots:
            return None
        s = roots[int(rng.integers(len(roots)))]
        s = Fraction(int(s.p), int(s.q))
    else:
        s = Fraction(int(rng.integers(1, 6)))
    return tuple(Fraction(a) + s * d for a, d in zip(base, direction))


def sample_points(ideal, n, rng, count):
    """Random integer points, zero patterns, projections onto the variety and
    secants through points already found on it."""
    gens = ideal.basis if ideal is not None else ()
    anchors = []
    for i in range(count):
        point = (0,) * n if i == 0 else _next_point(gens, n, rng, i % 4, anchors)
        if gens and _on_variety(gens, point):
            anchors.append(point)
        yield point


def _next_point(gens, n, rng, kind, anchors):
    point = list(random_point(rng, n))
    if kind == 0:
        return tuple(point)
    for j in range(n):
        if rng.random() < 0.5:
            point[j] = 0
    if kind == 3 and anchors:
        secant = _secant(gens, anchors[int(rng.integers(len(anchors)))], rng)
        if secant is not None:
            return secant
    if kind >= 2 and gens:
        return _project(gens, point, rng)
    return tuple(point)


def sample_check(report, system: SystemSpec, trials=None, seed=None, max_depth=None) -> SampleDiagnostics:
    """Compare rank drops of the stabilized bracket matrix with the singular ideal.

    At each point the numeric rank must be below the report's threshold
    exactly when every generator of the singular ideal vanishes.
    """
    trials = settings.SAMPLE_POINTS if trials is None else trials
    rng = default_rng(settings.SEED if seed is None else seed)
    diagnostics = SampleDiagnostics()
    if report.singular_ideal is None:
        diagnostics.skipped = "no singular ideal in report"
        report.certificates["sampling"] = diagnostics.to_dict()
        return diagnostics
    chain = stabilize_chain(system, report.mode, max_depth)
    if not chain.stabilized:
        diagnostics.skipped = "bracket module did not stabilize"
        report.certificates["sampling"] = diagnostics.to_dict()
        return diagnostics
    diagnostics.depth = chain.depth
    matrix = FieldMatrix(system.table, chain.module.generators, chain.depth, report.mode)
    gens = report.singular_ideal.basis
    for point in sample_points(report.singular_ideal, system.n, rng, trials):
        on = all(evaluate(g, point) == 0 for g in gens)
        low = numeric_rank(matrix, point) < report.threshold
        diagnostics.points += 1
        diagnostics.on_variety += on
        if on != low:
            logger.warning("rank/ideal mismatch at %s", point)
            diagnostics.mismatches.append(point)
    report.certificates["sampling"] = diagnostics.to_dict()
    return diagnostics
