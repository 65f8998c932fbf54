"""Module-route bounds, rank-l singular sets and strong accessibility."""

import logging

from polyaccess.ideal.ideal import Ideal
from polyaccess.lie.family import Mode
from polyaccess.lie.fields import SystemSpec
from polyaccess.minors.matrix import FieldMatrix, minor_ideal
from polyaccess.module.chain import stabilize_chain

from .accessibility import _base_report, algorithm1, generic_test, resolve_threshold
from .report import CAP_REACHED, IndexKind

logger = logging.getLogger(__name__)


def bound_analysis(system: SystemSpec, threshold=None, mode=Mode.ACCESSIBILITY, max_depth=None, command="bound"):
    """Stabilization depth of the bracket module and the minors there.

    The stabilization depth bounds the exact index from above, and the
    ``threshold``-minors of the stabilized module cut out the singular set.
    """
    mode = Mode(mode)
    threshold = resolve_threshold(system, threshold)
    test = generic_test(system, mode, threshold)
    report = _base_report(command, system, mode, threshold, test)
    chain = stabilize_chain(system, mode, max_depth)
    report.chain_trace = list(chain.trace)
    report.route = "module chain"
    if not chain.stabilized:
        report.status = CAP_REACHED
        report.notes.append(f"module chain still growing at depth {len(chain.trace) - 1}")
        return report
    report.index_kind = IndexKind.bound(mode)
    report.index_value = chain.depth
    report.matrix_depth = chain.depth
    report.certificates["module_generators"] = len(chain.module)
    report.certificates["module_basis_size"] = len(chain.module.groebner)
    if not test.full:
        return report
    matrix = FieldMatrix(system.table, chain.module.generators, chain.depth, mode)
    minors = minor_ideal(matrix, threshold, prune=False)
    report.singular_ideal = minors.ideal.reduced()
    return report


def rank_l_analysis(system: SystemSpec, l: int, mode=Mode.ACCESSIBILITY, max_depth=None):
    """Points where the bracket distribution has rank below ``l``."""
    resolve_threshold(system, l)
    return bound_analysis(system, l, mode, max_depth, command="rank")


def strong_analysis(system: SystemSpec, threshold=None, max_depth=None):
    """Strong accessibility: generic test, index or bound, and singular set.

    Under generic strong accessibility the strongly singular points are the
    accessibility singular points, so the singular set is taken from the
    accessibility analysis. The strong index is exact when Algorithm 1
    decides it on the drift-free families and bounded by the strong module
    chain otherwise.
    """
    threshold = resolve_threshold(system, threshold)
    test = generic_test(system, Mode.STRONG, threshold)
    report = _base_report("strong", system, Mode.STRONG, threshold, test)
    if system.is_driftless:
        report.notes.append("driftless system: the strong and plain bracket families coincide")
    if not test.full:
        return report

    plain = algorithm1(system, threshold, max_depth=max_depth)
    strong = algorithm1(system, threshold, mode=Mode.STRONG, max_depth=max_depth, fallback=False)
    chain = stabilize_chain(system, Mode.STRONG, max_depth)
    report.singular_ideal = plain.singular_ideal
    report.chain_trace = list(strong.chain_trace)
    report.route = f"accessibility singular set via {plain.route}"
    if strong.is_exact:
        report.index_kind = IndexKind.EXACT_L
        report.index_value = strong.index_value
        report.matrix_depth = strong.matrix_depth
    elif chain.stabilized:
        report.index_kind = IndexKind.BOUND_L
        report.index_value = chain.depth
        report.matrix_depth = chain.depth
    else:
        report.status = CAP_REACHED
    report.certificates["l_hat"] = chain.depth
    if plain.is_exact:
        report.certificates["r_star"] = plain.index_value
    if plain.is_exact and strong.is_exact:
        r, l = plain.index_value, strong.index_value
        report.certificates["index_relation_holds"] = l in (r, r + 1)
        if l not in (r, r + 1):
            logger.warning("strong index %d is not r* or r* + 1 (r* = %d)", l, r)
    if strong.is_exact and chain.stabilized and strong.index_value > chain.depth:
        logger.warning("strong bound %d below exact strong index %d", chain.depth, strong.index_value)
    if isinstance(plain.singular_ideal, Ideal) and isinstance(strong.singular_ideal, Ideal):
        report.certificates["strong_singular_matches"] = plain.singular_ideal.equals(strong.singular_ideal)
    return report
