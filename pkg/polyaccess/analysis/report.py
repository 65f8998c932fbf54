"""Result objects produced by the analyses."""

import enum
from dataclasses import dataclass, field
from typing import Optional

from polyaccess.ideal.ideal import Ideal
from polyaccess.lie.family import Mode
from polyaccess.poly.core import format_poly

COMPLETE = "complete"
CAP_REACHED = "cap reached"


class Verdict(str, enum.Enum):
    GENERIC = "generically accessible"
    NOWHERE = "nowhere accessible"
    GENERIC_STRONG = "generically strongly accessible"
    NOWHERE_STRONG = "nowhere strongly accessible"

    @classmethod
    def of(cls, mode, full_rank: bool) -> "Verdict":
        if Mode(mode) is Mode.STRONG:
            return cls.GENERIC_STRONG if full_rank else cls.NOWHERE_STRONG
        return cls.GENERIC if full_rank else cls.NOWHERE

    @property
    def accessible(self) -> bool:
        return self in (Verdict.GENERIC, Verdict.GENERIC_STRONG)


class IndexKind(str, enum.Enum):
    EXACT_R = "exact r*"
    EXACT_L = "exact l*"
    BOUND_R = "upper bound r^"
    BOUND_L = "upper bound l^"
    UNDECIDED = "undecided"

    @classmethod
    def exact(cls, mode):
        return cls.EXACT_L if Mode(mode) is Mode.STRONG else cls.EXACT_R

    @classmethod
    def bound(cls, mode):
        return cls.BOUND_L if Mode(mode) is Mode.STRONG else cls.BOUND_R

    @property
    def is_exact(self):
        return self in (IndexKind.EXACT_R, IndexKind.EXACT_L)

    @property
    def symbol(self):
        return {
            IndexKind.EXACT_R: "r*",
            IndexKind.EXACT_L: "l*",
            IndexKind.BOUND_R: "r^",
            IndexKind.BOUND_L: "l^",
        }.get(self)


def ideal_strings(ideal: Optional[Ideal]):
    if ideal is None:
        return None
    return [format_poly(g) for g in ideal.basis]


@dataclass
class DepthRecord:
    """What one depth of Algorithm 1 (or the closure start) looked like."""

    depth: int
    family_size: int
    columns: int
    minors: list
    radical: Optional[list] = None
    unsupported: Optional[str] = None
    invariant: Optional[bool] = None
    witness: Optional[str] = None

    def to_dict(self):
        return {
            "depth": self.depth,
            "family_size": self.family_size,
            "columns": self.columns,
            "minor_generators": list(self.minors),
            "radical_generators": self.radical,
            "unsupported": self.unsupported,
            "invariant": self.invariant,
            "witness": self.witness,
        }


@dataclass
class AnalysisReport:
    command: str
    mode: Mode
    threshold: int
    generic_rank: int
    verdict: Verdict
    singular_ideal: Optional[Ideal] = None
    index_kind: IndexKind = IndexKind.UNDECIDED
    index_value: Optional[int] = None
    route: str = ""
    status: str = COMPLETE
    matrix_depth: Optional[int] = None
    chain_trace: list = field(default_factory=list)
    closure_trace: list = field(default_factory=list)
    certificates: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def is_exact(self) -> bool:
        return self.index_kind.is_exact

    @property
    def singular_is_empty(self) -> Optional[bool]:
        if self.singular_ideal is None:
            return None
        return not self.singular_ideal.is_proper

    @property
    def singular_generators(self):
        return ideal_strings(self.singular_ideal)

    def to_dict(self):
        return {
            "command": self.command,
            "mode": Mode(self.mode).value,
            "threshold": self.threshold,
            "generic_rank": self.generic_rank,
            "verdict": self.verdict.value,
            "singular_generators": self.singular_generators,
            "singular_empty": self.singular_is_empty,
            "index_kind": self.index_kind.value,
            "index_value": self.index_value,
            "route": self.route,
            "status": self.status,
            "matrix_depth": self.matrix_depth,
            "chain_trace": [step.to_dict() for step in self.chain_trace],
            "closure_trace": [list(step) for step in self.closure_trace],
            "certificates": dict(self.certificates),
            "notes": list(self.notes),
        }
