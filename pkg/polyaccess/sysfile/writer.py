"""Print parsed systems back into the system-file grammar."""

from polyaccess.poly.core import format_poly
from polyaccess.poly.parser import format_expression

OPTION_KEYS = ("order", "max-depth", "seed", "mode", "rank")


def _row(items):
    return ", ".join(items)


def format_system(system_file) -> str:
    lines = []
    if system_file.immersed:
        source, T = system_file.analytic, system_file.immersion
        lines.append("vars " + " ".join(source.source))
        lines.append("drift: " + _row(format_expression(c) for c in source.drift))
        for label, comps in source.inputs:
            lines.append(f"input {label}: " + _row(format_expression(c) for c in comps))
        lines.append("immersion:")
        lines.append("  target " + " ".join(T.target.names))
        for name, entry in zip(T.target.names, T.entries):
            lines.append(f"  map {name} = {format_expression(entry)}")
        for relation in T.declared:
            lines.append(f"  relation {format_poly(relation)}")
    else:
        spec = system_file.spec
        lines.append("vars " + " ".join(spec.table.names))
        lines.append("drift: " + _row(format_poly(c) for c in spec.drift))
        for g in spec.inputs:
            lines.append(f"input {g.label}: " + _row(format_poly(c) for c in g))
    options = system_file.options
    if options:
        lines.append("options:")
        for key in OPTION_KEYS:
            if key in options:
                lines.append(f"  {key} {options[key]}")
    return "\n".join(lines) + "\n"
