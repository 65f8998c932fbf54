"""Generic rank of a polynomial matrix."""

import logging
from typing import NamedTuple, Optional

from numpy.random import default_rng
from sympy.polys.matrices import DomainMatrix

from polyaccess.conf import settings
from polyaccess.minors.matrix import FieldMatrix, determinant

logger = logging.getLogger(__name__)


class RankCertificate(NamedTuple):
    rank: int
    rows: tuple = ()
    columns: tuple = ()
    minor: Optional[object] = None  # nonzero polynomial minor of size ``rank``
    point: tuple = ()


def random_point(rng, n, spread=None):
    spread = settings.SAMPLE_RANGE if spread is None else spread
    return tuple(int(a) for a in rng.integers(-spread, spread + 1, size=n))


def _pivots(matrix):
    _, pivots = matrix.to_field().rref()
    return tuple(pivots)


def certified_rank(M: FieldMatrix, seed=None, samples=None) -> RankCertificate:
    """Generic rank with a nonzero minor as witness.

    Sampling at random integer points gives a lower bound and the witness
    minor. When that bound is below ``min(rows, cols)`` the rank is confirmed
    over the fraction field of the polynomial ring.
    """
    rows, cols = M.shape
    if not cols:
        return RankCertificate(0)
    rng = default_rng(settings.SEED if seed is None else seed)
    samples = settings.GENERIC_RANK_SAMPLES if samples is None else samples
    best, best_point, best_numeric = -1, None, None
    for _ in range(samples):
        point = random_point(rng, rows)
        numeric = M.at(point)
        rank = numeric.rank()
        if rank > best:
            best, best_point, best_numeric = rank, point, numeric
    if best == 0:
        symbolic = _symbolic_rank(M)
        if symbolic == 0:
            return RankCertificate(0, point=best_point)
        logger.info("sampling missed rank %d, resampling", symbolic)
        return certified_rank(M, (seed or 0) + 1, samples)

    column_set = _pivots(best_numeric)
    row_set = _pivots(best_numeric.extract(list(range(rows)), list(column_set)).transpose())
    minor = determinant(M.submatrix(row_set, column_set), M.table.ring)
    if not minor:
        raise AssertionError("witness minor vanishes identically")
    if best < min(rows, cols):
        symbolic = _symbolic_rank(M)
        if symbolic != best:
            logger.info("sampled rank %d below symbolic rank %d, resampling", best, symbolic)
            return certified_rank(M, (seed or 0) + 1, samples)
    return RankCertificate(best, row_set, column_set, minor, best_point)


def _symbolic_rank(M: FieldMatrix) -> int:
    pruned = M.pruned()
    rows, cols = pruned.shape
    if not cols:
        return 0
    if cols == 1:
        return 1
    entries = pruned.submatrix(range(rows), range(cols))
    matrix = DomainMatrix(entries, (rows, cols), M.table.ring.to_domain())
    return matrix.to_field().rank()


def generic_rank(M: FieldMatrix, seed=None, samples=None) -> int:
    return certified_rank(M, seed, samples).rank
