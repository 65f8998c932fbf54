"""Reader for system description files.

A file declares the state variables, an optional drift, one or more named
inputs and optionally an immersion block and an options block::

    # Example: driftless planar system
    vars x1 x2
    drift: 0, 0
    input g1: x2, 0
    input g2: 0, x1^2
    options:
      order degrevlex
      max-depth 8

Components are polynomials unless the file has an ``immersion:`` block, in
which case they may use ``sin(v)``, ``cos(v)`` and division.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from polyaccess.conf import settings
from polyaccess.core.exceptions import ArityError, ParseError, PolyaccessError
from polyaccess.immersion.mapping import TRIG, AnalyticSystem, ImmersionMap
from polyaccess.lie.family import Mode
from polyaccess.lie.fields import SystemSpec, VectorField
from polyaccess.poly.core import NAME_PATTERN, ORDERS, VarTable
from polyaccess.poly.parser import parse_expression, parse_polynomial

from .base import SectionBase, split_lines
from .validation import ValidationBase

logger = logging.getLogger(__name__)

DRIFT_LABEL = "f"


@dataclass
class SystemFile:
    """Parsed content of a system file."""

    spec: Optional[SystemSpec] = None
    analytic: Optional[AnalyticSystem] = None
    immersion: Optional[ImmersionMap] = None
    options: dict = field(default_factory=dict)

    @property
    def immersed(self) -> bool:
        return self.immersion is not None

    @property
    def source_names(self):
        return self.analytic.source if self.immersed else self.spec.table.names


def _components(line):
    """Split ``rest`` on commas, keeping each piece's column offset."""
    pieces, start = [], 0
    for i, ch in enumerate(line.rest + ","):
        if ch == ",":
            pieces.append((line.rest[start:i], start))
            start = i + 1
    return pieces


def _parse_piece(text, offset, line, parser, *args):
    if not text.strip():
        raise line.error("empty component", offset, expected="an expression")
    try:
        return parser(text, *args)
    except ParseError as exc:
        raise exc.shifted(line.number, line.column + offset - 1) from None


def _check_name(name, line, offset=0):
    if not NAME_PATTERN.match(name) or name in ("sin", "cos"):
        raise line.error(f"invalid name {name!r}", offset, expected="an identifier")


class SystemValidator(ValidationBase):
    sections = ("vars", "options", "immersion", "drift", "inputs")

    def __init__(self, order=None):
        super().__init__()
        self.order = order

    def valid_vars(self, data):
        if data.get("vars") is None:
            raise ParseError("missing vars line", expected="vars <name> ...")
        _, names = data["vars"]
        return {"names": tuple(names)}

    def valid_options(self, data):
        options = {key: value for key, (value, _) in data.get("options", {}).items()}
        order = self.order or options.get("order") or settings.MONOMIAL_ORDER
        return {"options": options, "order": order}

    def valid_immersion(self, data):
        block = data.get("immersion")
        if block is None:
            return {"map": None}
        names = data["names"]
        if block.target is None:
            raise ParseError("immersion block without target line", line=block.line.number, expected="target")
        target_line, target_names = block.target
        target = VarTable(tuple(target_names), data["order"])
        if len(target_names) < len(names):
            raise target_line.error(
                f"{len(target_names)} target variables for {len(names)} source variables"
            )
        entries = {}
        for name, text, offset, line in block.maps:
            if name not in target_names:
                raise line.error(f"unknown target variable {name!r}", expected=" ".join(target_names))
            if name in entries:
                raise line.error(f"duplicate map for {name!r}")
            entries[name] = _parse_piece(text, offset, line, parse_expression, names)
        ordered = []
        for i, name in enumerate(target_names):
            if name in entries:
                ordered.append(entries[name])
            elif i < len(names):
                ordered.append(parse_expression(names[i], names))
            else:
                raise target_line.error(f"no map entry for target variable {name!r}")
        relations = tuple(
            _parse_piece(text, offset, line, parse_polynomial, target) for text, offset, line in block.relations
        )
        try:
            immersion = ImmersionMap(names, target, tuple(ordered), relations)
        except PolyaccessError as exc:
            raise ParseError(str(exc), line=block.line.number) from None
        return {"map": immersion}

    def _field(self, data, label, line):
        names = data["names"]
        pieces = _components(line)
        if len(pieces) != len(names):
            raise line.error(
                f"{label} has {len(pieces)} components but vars declares {len(names)}",
                len(line.rest),
                expected=f"{len(names)} comma-separated components",
                cls=ArityError,
            )
        if data["map"] is not None:
            declared = set(data["map"].entries)
            comps = []
            for text, offset in pieces:
                expr = _parse_piece(text, offset, line, parse_expression, names)
                for atom in sorted(expr.atoms(*TRIG), key=str):
                    if atom not in declared:
                        raise line.error(f"undeclared transcendental {atom}", offset, expected="a map entry for it")
                comps.append(expr)
            return tuple(comps)
        table = data["table"]
        comps = tuple(_parse_piece(t, o, line, parse_polynomial, table) for t, o in pieces)
        return VectorField(table, comps, label)

    def valid_drift(self, data):
        if data["map"] is None:
            try:
                data["table"] = VarTable(data["names"], data["order"])
            except PolyaccessError as exc:
                raise data["vars"][0].error(str(exc)) from None
        line = data.get("drift")
        if line is None:
            if data["map"] is not None:
                return {"drift_field": (0,) * len(data["names"])}
            return {"drift_field": VectorField.zero(data["table"], DRIFT_LABEL)}
        return {"drift_field": self._field(data, DRIFT_LABEL, line)}

    def valid_inputs(self, data):
        inputs = data.get("inputs", [])
        if not inputs:
            raise ParseError("no input declared", expected="input <name>: ...")
        seen = {DRIFT_LABEL}
        fields = []
        for name, line in inputs:
            if name in seen:
                raise line.error(f"duplicate field name {name!r}")
            seen.add(name)
            fields.append((name, self._field(data, name, line)))
        return {"input_fields": fields}

    def clean(self, data):
        if data["map"] is not None:
            analytic = AnalyticSystem(data["names"], data["drift_field"], tuple(data["input_fields"]), DRIFT_LABEL)
            return {"result": SystemFile(None, analytic, data["map"], data["options"])}
        spec = SystemSpec(data["table"], data["drift_field"], tuple(f for _, f in data["input_fields"]))
        return {"result": SystemFile(spec, None, None, data["options"])}


class ImmersionSection(SectionBase):
    title = "immersion block"

    def __init__(self, line):
        super().__init__()
        self.line = line
        self.target = None
        self.maps = []
        self.relations = []

    def on_target(self, line):
        if self.target is not None:
            raise line.error("duplicate target line")
        names = line.rest.split()
        if not names:
            raise line.error("no target variables", expected="names")
        for name in names:
            _check_name(name, line)
        if len(set(names)) != len(names):
            raise line.error("duplicate target variable")
        self.target = (line, names)

    def on_map(self, line):
        name, sep, expr = line.rest.partition("=")
        if not sep:
            raise line.error("map without '='", len(name), expected="=")
        _check_name(name.strip(), line)
        self.maps.append((name.strip(), expr, len(name) + 1, line))

    def on_relation(self, line):
        self.relations.append((line.rest, 0, line))


def _integer(line, minimum):
    try:
        value = int(line.rest)
    except ValueError:
        raise line.error(f"not an integer: {line.rest!r}", expected="an integer") from None
    if value < minimum:
        raise line.error(f"{line.keyword} must be at least {minimum}")
    return value


class OptionsSection(SectionBase):
    title = "options block"

    def _store(self, line, value):
        if line.keyword in self.data:
            raise line.error(f"duplicate option {line.keyword!r}")
        self.data[line.keyword] = (value, line)

    def on_order(self, line):
        if line.rest not in ORDERS:
            raise line.error(f"unknown order {line.rest!r}", expected=" | ".join(ORDERS))
        self._store(line, line.rest)

    def on_max_depth(self, line):
        self._store(line, _integer(line, 0))

    def on_seed(self, line):
        self._store(line, _integer(line, 0))

    def on_mode(self, line):
        try:
            self._store(line, Mode(line.rest).value)
        except ValueError:
            raise line.error(f"unknown mode {line.rest!r}", expected="accessibility | strong") from None

    def on_rank(self, line):
        self._store(line, _integer(line, 1))


class SystemReader(SectionBase):
    """Top-level section of a system file."""

    validator_cls = SystemValidator
    blocks = {"immersion": ImmersionSection, "options": OptionsSection}

    def __init__(self, order=None):
        super().__init__()
        self.validator = SystemValidator(order)
        self.data = {"vars": None, "drift": None, "inputs": []}
        self._block = None

    def read(self, text):
        for line in split_lines(text):
            if line.indent:
                if self._block is None:
                    raise ParseError("unexpected indentation", line=line.number, column=1)
                self._block.dispatch(line)
                continue
            self._block = None
            self.dispatch(line)
        if "options" in self.data:
            self.data["options"] = self.data["options"].data
        self.validate()
        return self.cleaned_data["result"]

    def on_vars(self, line):
        if self.data["vars"] is not None:
            raise line.error("duplicate vars line")
        names = line.rest.split()
        if not names:
            raise line.error("no variables declared", expected="names")
        for name in names:
            _check_name(name, line)
        if len(set(names)) != len(names):
            raise line.error(f"duplicate variable names in {' '.join(names)}")
        self.data["vars"] = (line, names)

    def on_drift(self, line):
        if self.data["drift"] is not None:
            raise line.error("duplicate drift line")
        self.data["drift"] = line

    def on_input(self, line):
        name, sep, rest = line.rest.partition(":")
        name = name.strip()
        if not sep:
            raise line.error("input without ':'", len(line.rest), expected=":")
        _check_name(name, line)
        offset = len(line.rest) - len(rest) + (len(rest) - len(rest.lstrip()))
        body = type(line)(line.number, line.indent, line.keyword, rest.strip(), line.column + offset, line.keyword_column)
        self.data["inputs"].append((name, body))

    def _open(self, line):
        if line.rest:
            raise line.error("unexpected text after block header")
        if line.keyword in self.data:
            raise line.error(f"duplicate {line.keyword} block")
        block = self.blocks[line.keyword](line) if line.keyword == "immersion" else self.blocks[line.keyword]()
        self.data[line.keyword] = block
        self._block = block

    on_immersion = _open
    on_options = _open


def parse(text: str, order=None) -> SystemFile:
    """Parse system-file text; ``order`` overrides the file's monomial order."""
    result = SystemReader(order).read(text)
    logger.debug("parsed system with %d inputs", len(result.analytic.inputs if result.immersed else result.spec.inputs))
    return result


def parse_file(path, order=None) -> SystemFile:
    return parse(Path(path).read_text(encoding="utf-8"), order)
