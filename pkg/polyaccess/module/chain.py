"""Stabilization of the module chains spanned by bracket families."""

import logging
from dataclasses import dataclass, field
from typing import Optional

from polyaccess.conf import settings
from polyaccess.lie.family import Mode
from polyaccess.lie.fields import SystemSpec, lie_bracket
from polyaccess.module.basis import ModuleBasis
from polyaccess.module.submodule import PolySubmodule

logger = logging.getLogger(__name__)

STABILIZED = "stabilized"
CAP_REACHED = "cap reached"


@dataclass(frozen=True)
class ChainStep:
    depth: int
    generated: int
    kept: int
    basis_size: int

    def to_dict(self):
        return {
            "depth": self.depth,
            "generated": self.generated,
            "kept": self.kept,
            "module_basis_size": self.basis_size,
        }


@dataclass
class ChainResult:
    mode: Mode
    status: str
    module: PolySubmodule
    depth: Optional[int] = None
    trace: list = field(default_factory=list)

    @property
    def stabilized(self) -> bool:
        return self.status == STABILIZED


def depth_cap(system: SystemSpec, max_depth=None) -> int:
    if max_depth is not None:
        return max_depth
    if settings.MAX_DEPTH is not None:
        return settings.MAX_DEPTH
    return 2 * system.n


def stabilize_chain(system: SystemSpec, mode=Mode.ACCESSIBILITY, max_depth=None) -> ChainResult:
    """Grow the bracket module depth by depth until one step adds nothing.

    Only brackets of the previous step's new generators are formed: a
    bracket of a field already in the module with any operator lies in the
    module spanned by brackets of the generators. The stabilization depth is
    the first ``k`` whose next step contributes no new module element.
    """
    mode = Mode(mode)
    cap = depth_cap(system, max_depth)
    seeds = system.inputs if mode is Mode.STRONG else system.operators
    basis = ModuleBasis(system.table)
    kept = [X for X in seeds if basis.add(X)]
    frontier = list(kept)
    trace = [ChainStep(0, len(seeds), len(kept), len(basis))]

    depth = 0
    while depth < cap:
        new = []
        generated = 0
        for X in system.operators:
            for h in frontier:
                bracket = lie_bracket(X, h)
                if bracket.is_zero:
                    continue
                generated += 1
                if basis.add(bracket):
                    new.append(bracket)
        trace.append(ChainStep(depth + 1, generated, len(new), len(basis)))
        logger.debug("chain depth %d: %d brackets, %d new", depth + 1, generated, len(new))
        if not new:
            module = PolySubmodule(system.table, tuple(kept), depth)
            logger.info("%s chain stabilized at depth %d", mode.value, depth)
            return ChainResult(mode, STABILIZED, module, depth, trace)
        kept.extend(new)
        frontier = new
        depth += 1

    logger.warning("%s chain still growing at depth cap %d", mode.value, cap)
    module = PolySubmodule(system.table, tuple(kept), depth)
    return ChainResult(mode, CAP_REACHED, module, None, trace)
