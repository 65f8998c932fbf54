"""Invariance of ideals under Lie derivatives, and the invariant closure."""

import logging
from typing import NamedTuple, Optional

from polyaccess.ideal.ideal import Ideal
from polyaccess.lie.fields import lie_derivative

logger = logging.getLogger(__name__)


class InvarianceCheck(NamedTuple):
    invariant: bool
    witness: Optional[tuple] = None  # (generator, field) with L_X z outside the ideal


def is_invariant(ideal: Ideal, fields) -> InvarianceCheck:
    """Check ``L_X z`` lies in ``ideal`` for every generator ``z`` and field ``X``."""
    for z in ideal.generators:
        for X in fields:
            if not ideal.contains(lie_derivative(X, z)):
                return InvarianceCheck(False, (z, X))
    return InvarianceCheck(True)


def closure_rounds(ideal: Ideal, fields, max_rounds=None):
    """Yield ``J_0 = ideal``, ``J_1``, ... until no derivative leaves the ideal.

    Each round adds the Lie derivatives of the previous round's new
    generators that are not already members, made monic. The ascending chain
    stops by Noetherianity.
    """
    current = ideal
    frontier = list(ideal.generators)
    yield current
    rounds = 0
    while frontier:
        if max_rounds is not None and rounds >= max_rounds:
            logger.warning("invariant closure stopped after %d rounds", rounds)
            return
        added = []
        for z in frontier:
            for X in fields:
                d = lie_derivative(X, z)
                if not d or current.contains(d):
                    continue
                d = d.monic()
                if d not in added:
                    added.append(d)
        if not added:
            return
        current = current.extend(added)
        frontier = added
        rounds += 1
        logger.debug("closure round %d: %d new generators", rounds, len(added))
        yield current


def invariant_closure(ideal: Ideal, fields, max_rounds=None) -> Ideal:
    """Smallest ideal containing ``ideal`` closed under every ``L_X``."""
    for current in closure_rounds(ideal, fields, max_rounds):
        pass
    return current
