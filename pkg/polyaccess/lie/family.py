"""Bracket families: fields generated by iterated left-normed brackets."""

import enum
import logging
from dataclasses import dataclass

from polyaccess.lie.fields import SystemSpec, lie_bracket

logger = logging.getLogger(__name__)


class Mode(str, enum.Enum):
    ACCESSIBILITY = "accessibility"
    STRONG = "strong"


@dataclass(frozen=True)
class BracketFamily:
    """Fields of bracket depth at most ``depth``, in insertion order.

    Insertion order is by depth and, within one depth, operator-major over the
    previous generation. ``frontier`` holds the fields added at ``depth``.
    Zero brackets and nonzero scalar multiples of fields already present are
    never inserted.
    """

    depth: int
    fields: tuple
    frontier: tuple
    mode: Mode = Mode.ACCESSIBILITY

    def __len__(self):
        return len(self.fields)

    @property
    def labels(self):
        return [X.label for X in self.fields]


def _add_unique(candidates, fields, keys):
    added = []
    for X in candidates:
        if X.is_zero:
            continue
        key = X.projective_key()
        if key in keys:
            continue
        keys.add(key)
        fields.append(X)
        added.append(X)
    return added


def initial_family(system: SystemSpec, mode=Mode.ACCESSIBILITY) -> BracketFamily:
    """Depth-0 family: ``{f, g_1..g_m}`` or, in strong mode, ``{g_1..g_m}``."""
    mode = Mode(mode)
    seeds = system.inputs if mode is Mode.STRONG else system.operators
    fields, keys = [], set()
    added = _add_unique(seeds, fields, keys)
    return BracketFamily(0, tuple(fields), tuple(added), mode)


def extend_family(family: BracketFamily, system: SystemSpec) -> BracketFamily:
    """Add ``[X, h]`` for every operator ``X`` and every ``h`` of the frontier."""
    fields = list(family.fields)
    keys = {X.projective_key() for X in fields}
    candidates = (lie_bracket(X, h) for X in system.operators for h in family.frontier)
    added = _add_unique(candidates, fields, keys)
    logger.debug("depth %d: %d new fields", family.depth + 1, len(added))
    return BracketFamily(family.depth + 1, tuple(fields), tuple(added), family.mode)


def iter_families(system: SystemSpec, mode=Mode.ACCESSIBILITY, max_depth=None):
    """Yield the families of depth 0, 1, 2, ... up to ``max_depth``."""
    family = initial_family(system, mode)
    yield family
    while max_depth is None or family.depth < max_depth:
        family = extend_family(family, system)
        yield family


def family_at(system: SystemSpec, depth: int, mode=Mode.ACCESSIBILITY) -> BracketFamily:
    for family in iter_families(system, mode, depth):
        pass
    return family
