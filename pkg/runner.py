"""Analysis dispatcher used by the CLI."""

import logging
from dataclasses import dataclass, field
from typing import Optional

from polyaccess.analysis import (
    algorithm1,
    algorithm2,
    bound_analysis,
    rank_l_analysis,
    sample_check,
    strong_analysis,
)
from polyaccess.analysis.report import CAP_REACHED
from polyaccess.conf import settings
from polyaccess.core.exceptions import PolyaccessError
from polyaccess.immersion import derive_immersed, pull_back_singular, verify_immersion
from polyaccess.lie.family import Mode
from polyaccess.poly.core import format_poly
from polyaccess.sysfile import parse_file

logger = logging.getLogger(__name__)

COMMANDS = ("index", "singular", "bound", "strong", "rank", "immerse", "full")


@dataclass
class RunResult:
    command: str
    system: dict
    reports: list = field(default_factory=list)
    immersion: Optional[dict] = None

    @property
    def cap_reached(self) -> bool:
        return any(report.status == CAP_REACHED for report in self.reports)


def load(path, order=None):
    return parse_file(path, order)


def configure(options, max_depth=None, seed=None):
    """Apply file options, then flags, to the settings."""
    settings.configure(
        MAX_DEPTH=options.get("max-depth"),
        SEED=options.get("seed"),
    )
    settings.configure(MAX_DEPTH=max_depth, SEED=seed)


def _summary(system_file, system):
    return {
        "variables": list(system.table.names),
        "order": system.table.order,
        "drift": not system.is_driftless,
        "inputs": [g.label for g in system.inputs],
        "immersion": list(system_file.immersion.target.names) if system_file.immersed else None,
    }


def _fields(system):
    return {X.label: [format_poly(c) for c in X] for X in (system.drift, *system.inputs)}


def run(command, system_file, l=None, check=False) -> RunResult:
    """Run one CLI command on a parsed system file."""
    if command not in COMMANDS:
        raise PolyaccessError(f"unknown command {command!r}")
    options = system_file.options
    mode = Mode(options.get("mode", Mode.ACCESSIBILITY.value))
    imm = None
    if system_file.immersed:
        imm = derive_immersed(system_file.analytic, system_file.immersion)
        system = imm.system
        threshold = options.get("rank", len(system_file.analytic.source))
    else:
        system = system_file.spec
        threshold = options.get("rank")
    result = RunResult(command, _summary(system_file, system))

    if command == "immerse":
        if imm is None:
            raise PolyaccessError("the system file has no immersion block")
        result.immersion = {"fields": _fields(system)}
        if check:
            result.immersion["check"] = _check(system_file, imm)
        return result

    if command == "index":
        result.reports.append(algorithm1(system, threshold, mode))
    elif command == "singular":
        result.reports.append(algorithm2(system, threshold, mode))
    elif command == "bound":
        result.reports.append(bound_analysis(system, threshold, mode))
    elif command == "strong":
        result.reports.append(strong_analysis(system, threshold))
    elif command == "rank":
        result.reports.append(rank_l_analysis(system, l or threshold or system.n, mode))
    elif command == "full":
        index = algorithm1(system, threshold, mode)
        sample_check(index, system)
        result.reports += [
            index,
            algorithm2(system, threshold, mode),
            bound_analysis(system, threshold, mode),
            strong_analysis(system, threshold),
        ]

    if imm is not None:
        result.immersion = {"fields": _fields(system)}
        if command == "full":
            result.immersion["check"] = _check(system_file, imm)
        primary = next((r for r in result.reports if r.singular_ideal is not None), None)
        if primary is not None:
            if primary.threshold != len(system_file.analytic.source):
                primary.notes.append("pull-back is only meaningful at rank threshold = source dimension")
            pullback = pull_back_singular(imm, primary.singular_ideal, system_file.immersion)
            result.immersion["pullback"] = pullback.to_dict()
    return result


def _check(system_file, imm):
    outcome = verify_immersion(system_file.analytic, system_file.immersion, imm)
    witness = None
    if not outcome.ok:
        j, label = outcome.witness
        witness = f"{label}, component {system_file.immersion.target.names[j]}"
    return {"ok": outcome.ok, "witness": witness}
