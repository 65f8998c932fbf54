"""Matrices whose columns are vector fields, and their minors."""

import logging
from dataclasses import dataclass
from itertools import combinations

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from polyaccess.core.exceptions import MinorSizeError, VarTableMismatch
from polyaccess.ideal.ideal import Ideal
from polyaccess.lie.family import BracketFamily, Mode
from polyaccess.module.submodule import independent_columns
from polyaccess.poly.core import VarTable, evaluate_qq, format_poly, to_qq

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldMatrix:
    """``n x q`` matrix, one column per vector field."""

    table: VarTable
    columns: tuple
    depth: int = 0
    mode: Mode = Mode.ACCESSIBILITY

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(self.columns))
        for X in self.columns:
            if X.table != self.table:
                raise VarTableMismatch(f"column {X.label} is over another variable table")

    @property
    def shape(self):
        return self.table.n, len(self.columns)

    @property
    def labels(self):
        return [X.label for X in self.columns]

    def entry(self, i, j):
        return self.columns[j][i]

    def at(self, point) -> DomainMatrix:
        """Numeric matrix at a rational point."""
        point = [to_qq(a) for a in point]
        rows, cols = self.shape
        entries = [[evaluate_qq(self.entry(i, j), point) for j in range(cols)] for i in range(rows)]
        return DomainMatrix(entries, (rows, cols), QQ)

    def submatrix(self, rows, cols):
        return [[self.entry(i, j) for j in cols] for i in rows]

    def pruned(self) -> "FieldMatrix":
        """Drop columns already in the module spanned by earlier columns."""
        kept = independent_columns(self.columns, self.table)
        return FieldMatrix(self.table, tuple(kept), self.depth, self.mode)


def build_matrix(family: BracketFamily) -> FieldMatrix:
    fields = family.fields
    if not fields:
        raise MinorSizeError("cannot build a matrix from an empty family")
    return FieldMatrix(fields[0].table, fields, family.depth, family.mode)


def determinant(rows, ring):
    """Determinant of a square matrix of polynomials."""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    if size == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    if size == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return DomainMatrix(rows, (size, size), ring.to_domain()).det()


def numeric_rank(M: FieldMatrix, point) -> int:
    rows, cols = M.shape
    if not cols:
        return 0
    return M.at(point).rank()


@dataclass(frozen=True)
class MinorIdeal:
    """Ideal of the ``size x size`` minors of a FieldMatrix."""

    ideal: Ideal
    size: int
    depth: int
    columns: tuple = ()

    @property
    def generators(self):
        return self.ideal.generators


def minor_ideal(M: FieldMatrix, l: int, prune=True) -> MinorIdeal:
    """Ideal generated by the nonzero ``l x l`` minors of ``M``.

    With ``prune`` the columns are first thinned to a module-independent
    subset; the resulting ideal is the same since every dropped column is a
    polynomial combination of kept ones. If fewer than ``l`` columns remain
    every minor vanishes and the zero ideal is returned.
    """
    rows, cols = M.shape
    if not 1 <= l <= rows:
        raise MinorSizeError(f"minor size {l} outside 1..{rows}")
    if prune:
        M = M.pruned()
        cols = M.shape[1]
    if l > cols:
        return MinorIdeal(Ideal.zero(M.table), l, M.depth, tuple(M.labels))
    ring = M.table.ring
    seen = {}
    for row_set in combinations(range(rows), l):
        for col_set in combinations(range(cols), l):
            det = determinant(M.submatrix(row_set, col_set), ring)
            if det:
                det = det.monic()
                seen.setdefault(format_poly(det), det)
    gens = tuple(seen[key] for key in sorted(seen))
    logger.debug("depth %d: %d distinct nonzero %dx%d minors", M.depth, len(gens), l, l)
    return MinorIdeal(Ideal(M.table, gens), l, M.depth, tuple(M.labels))
