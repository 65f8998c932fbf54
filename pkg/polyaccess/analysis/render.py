"""Text and structured renderings of analysis results."""

import json

from polyaccess.conf import settings

from .report import IndexKind


def _set_name(report):
    name = "S_∞*" if report.command == "strong" else "S_∞"
    if report.threshold is not None and report.command == "rank":
        name += f"^<{report.threshold}"
    return name


def _ideal_text(report):
    ideal = report.singular_ideal
    if ideal is None:
        return "not determined"
    if not ideal.is_proper:
        return "empty (⟨1⟩)"
    return str(ideal)


def render_report(report) -> str:
    lines = [f"{report.command} ({report.mode.value}): {report.verdict.value}, generic rank {report.generic_rank}"]
    head = f"{_set_name(report)}: {_ideal_text(report)}"
    if report.index_kind is IndexKind.UNDECIDED:
        if report.command != "singular":
            head = f"index undecided; {head}"
    else:
        head = f"{report.index_kind.symbol} = {report.index_value}; {head}"
    lines.append(head)
    if report.status != "complete":
        lines.append(f"status: {report.status}")
    if report.route:
        lines.append(f"route: {report.route}")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def render_immersion(info) -> str:
    lines = []
    if "check" in info:
        check = info["check"]
        state = "verified" if check["ok"] else f"FAILED at {check['witness']}"
        lines.append(f"immersion: {state}")
    for name, comps in info.get("fields", {}).items():
        lines.append(f"  {name} = ({', '.join(comps)})")
    pullback = info.get("pullback")
    if pullback:
        if pullback["empty"] is True:
            lines.append("empty intersection with im T; accessible everywhere")
            lines.append(f"certificate: {pullback['grade']}")
        elif pullback["empty"] is False:
            lines.append(f"S_∞ ∩ im T: ⟨{', '.join(pullback['generators'])}⟩ ({pullback['grade']})")
            lines.append(f"in source coordinates: {'; '.join(pullback['source'])}")
        else:
            lines.append(f"S_∞ ∩ im T: ⟨{', '.join(pullback['generators'])}⟩ (emptiness {pullback['grade']})")
    return "\n".join(lines)


def render_text(result) -> str:
    blocks = [render_report(report) for report in result.reports]
    if result.immersion:
        blocks.append(render_immersion(result.immersion))
    return "\n\n".join(block for block in blocks if block) + "\n"


def render_structured(result) -> str:
    document = {
        "schema": settings.SCHEMA_VERSION,
        "command": result.command,
        "system": result.system,
        "reports": [report.to_dict() for report in result.reports],
    }
    if result.immersion:
        document["immersion"] = result.immersion
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
