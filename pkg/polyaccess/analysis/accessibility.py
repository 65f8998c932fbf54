"""Generic rank test and the two singular-set algorithms."""

import logging
from typing import NamedTuple

from polyaccess.core.exceptions import MinorSizeError
from polyaccess.ideal.ideal import Ideal
from polyaccess.ideal.invariance import closure_rounds, is_invariant
from polyaccess.ideal.radical import Unsupported, real_radical_restricted
from polyaccess.lie.family import BracketFamily, Mode, extend_family, initial_family
from polyaccess.lie.fields import SystemSpec
from polyaccess.minors.matrix import build_matrix, minor_ideal
from polyaccess.minors.rank import generic_rank
from polyaccess.module.chain import depth_cap
from polyaccess.poly.core import format_poly

from .report import CAP_REACHED, AnalysisReport, DepthRecord, IndexKind, Verdict, ideal_strings

logger = logging.getLogger(__name__)


class GenericTest(NamedTuple):
    rank: int
    verdict: Verdict
    depth: int
    family: BracketFamily

    @property
    def full(self) -> bool:
        return self.verdict.accessible


def resolve_threshold(system: SystemSpec, threshold=None) -> int:
    if threshold is None:
        return system.n
    if not 1 <= threshold <= system.n:
        raise MinorSizeError(f"rank threshold {threshold} outside 1..{system.n}")
    return threshold


def generic_test(system: SystemSpec, mode=Mode.ACCESSIBILITY, threshold=None) -> GenericTest:
    """Generic rank of the bracket families up to depth ``n - 1``.

    Stops at the first depth whose generic rank reaches ``threshold``
    (``n`` by default); that depth is the starting depth of Algorithm 1.
    """
    mode = Mode(mode)
    threshold = resolve_threshold(system, threshold)
    family = initial_family(system, mode)
    while True:
        rank = generic_rank(build_matrix(family))
        logger.debug("%s depth %d: generic rank %d", mode.value, family.depth, rank)
        if rank >= threshold or family.depth >= system.n - 1:
            break
        family = extend_family(family, system)
    return GenericTest(rank, Verdict.of(mode, rank >= threshold), family.depth, family)


def _base_report(command, system, mode, threshold, test) -> AnalysisReport:
    report = AnalysisReport(command, Mode(mode), threshold, test.rank, test.verdict)
    if not test.full:
        report.singular_ideal = Ideal.zero(system.table)
        report.route = "generic rank test"
        report.notes.append(
            f"generic rank {test.rank} < {threshold} through depth {test.depth}: every point is singular"
        )
    return report


def _witness_text(check):
    z, X = check.witness
    return f"L_{X.label}({format_poly(z)}) not in ideal"


def algorithm1(system: SystemSpec, threshold=None, mode=Mode.ACCESSIBILITY, max_depth=None, fallback=True):
    """Exact index and singular set from real radicals of the minor ideals.

    From the first depth with full generic rank, each depth's minor ideal is
    passed through the restricted real radical and tested for invariance
    under every system field. The first invariant radical is the singular
    ideal and its depth the exact index. An unsupported radical hands over to
    :func:`algorithm2` when ``fallback`` is set.
    """
    mode = Mode(mode)
    threshold = resolve_threshold(system, threshold)
    test = generic_test(system, mode, threshold)
    report = _base_report("index", system, mode, threshold, test)
    if not test.full:
        return report

    fields = system.operators
    cap = depth_cap(system, max_depth)
    family = test.family
    previous = None
    while family.depth <= cap:
        minors = minor_ideal(build_matrix(family), threshold)
        if previous is not None and not minors.ideal.contains_ideal(previous):
            logger.warning("minor ideal shrank from depth %d to %d", family.depth - 1, family.depth)
        record = DepthRecord(
            family.depth, len(family), len(minors.columns), ideal_strings(minors.ideal)
        )
        report.chain_trace.append(record)
        radical = real_radical_restricted(minors.ideal)
        if isinstance(radical, Unsupported):
            record.unsupported = radical.reason
            logger.info("depth %d: %s", family.depth, radical)
            if not fallback:
                report.route = "algorithm 1"
                report.notes.append(f"index undecided at depth {family.depth}: {radical.reason}")
                return report
            return _hand_over(report, system, threshold, mode, family.depth, radical)
        record.radical = ideal_strings(radical)
        check = is_invariant(radical, fields)
        record.invariant = check.invariant
        if check.invariant:
            report.singular_ideal = radical
            report.index_kind = IndexKind.exact(mode)
            report.index_value = family.depth
            report.matrix_depth = family.depth
            report.route = "algorithm 1"
            _comparison_bound(report, system)
            return report
        record.witness = _witness_text(check)
        previous = minors.ideal
        family = extend_family(family, system)

    logger.warning("algorithm 1 reached the depth cap %d", cap)
    report.status = CAP_REACHED
    report.route = "algorithm 1"
    report.notes.append(f"no invariant real radical up to depth {cap}")
    return report


def _hand_over(report, system, threshold, mode, depth, radical):
    other = algorithm2(system, threshold, mode)
    report.singular_ideal = other.singular_ideal
    report.index_kind = IndexKind.UNDECIDED
    report.route = f"algorithm 2 (real radical unsupported at depth {depth})"
    report.matrix_depth = other.matrix_depth
    report.closure_trace = other.closure_trace
    report.certificates.update(other.certificates)
    report.notes.append(f"index undecided at depth {depth}: {radical.reason}")
    return report


def _comparison_bound(report, system):
    if system.n != 2:
        return
    d = system.degree
    bound = 6 * d * d - 2 * d + 2
    report.certificates["planar_bound"] = bound
    report.certificates["within_planar_bound"] = report.index_value <= bound
    report.notes.append(f"planar comparison: {report.index_value} <= 6d^2 - 2d + 2 = {bound} for d = {d}")


def algorithm2(system: SystemSpec, threshold=None, mode=Mode.ACCESSIBILITY, max_rounds=None):
    """Singular set as the variety of the invariant closure of one minor ideal.

    Uses the first depth ``q < n`` with full generic rank. No index is
    claimed.
    """
    mode = Mode(mode)
    threshold = resolve_threshold(system, threshold)
    test = generic_test(system, mode, threshold)
    report = _base_report("singular", system, mode, threshold, test)
    if not test.full:
        return report

    fields = system.operators
    family = test.family
    minors = minor_ideal(build_matrix(family), threshold)
    report.chain_trace.append(
        DepthRecord(family.depth, len(family), len(minors.columns), ideal_strings(minors.ideal))
    )
    report.matrix_depth = family.depth
    report.route = "algorithm 2"
    if not minors.ideal.is_proper:
        report.singular_ideal = Ideal.unit(system.table)
        report.notes.append(f"minor ideal at depth {family.depth} is the unit ideal: no singular points")
        return report

    rounds = list(closure_rounds(minors.ideal, fields, max_rounds))
    closure = rounds[-1].reduced()
    report.closure_trace = [[format_poly(g) for g in J.generators] for J in rounds]
    report.certificates["closure_rounds"] = len(rounds) - 1
    report.certificates["closure_invariant"] = is_invariant(closure, fields).invariant
    report.singular_ideal = closure
    return report
