import re
from dataclasses import dataclass

from polyaccess.core.exceptions import ParseError

from .validation import ValidationBase

KEYWORD = re.compile(r"[A-Za-z][A-Za-z0-9-]*")


@dataclass(frozen=True)
class Line:
    """One significant line of a system file."""

    number: int
    indent: int
    keyword: str
    rest: str
    column: int  # 1-based column where ``rest`` starts
    keyword_column: int

    def error(self, message, offset=0, expected=None, cls=ParseError):
        return cls(message, line=self.number, column=self.column + offset, expected=expected)

    @property
    def end_column(self):
        return self.column + len(self.rest)


def split_lines(text):
    """Significant lines with comments removed and positions kept."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        stripped = body.lstrip()
        indent = len(body) - len(stripped)
        match = KEYWORD.match(stripped)
        if match is None:
            raise ParseError("expected a keyword", line=number, column=indent + 1, expected="a keyword")
        keyword = match.group(0)
        rest_start = indent + match.end()
        rest = body[rest_start:]
        lead = len(rest) - len(rest.lstrip())
        rest_start += lead
        rest = rest.lstrip()
        if rest.startswith(":"):
            rest = rest[1:]
            lead = len(rest) - len(rest.lstrip())
            rest_start += 1 + lead
            rest = rest.lstrip()
        lines.append(Line(number, indent, keyword, rest, rest_start + 1, indent + 1))
    return lines


class SectionMeta(type):
    """Collects line handlers defined on subclasses.

    Methods following the ``on_<keyword>`` naming pattern are registered as
    handlers for lines starting with ``<keyword>``; underscores in the method
    name stand for dashes in the keyword (``on_max_depth`` handles
    ``max-depth``). Handlers accept ``self`` and the :class:`Line`.
    """

    def __new__(cls, name, bases, attrs):
        handlers = {}
        for base in bases:
            handlers.update(getattr(base, "handlers", {}))

        for attr_name, attr_value in list(attrs.items()):
            if callable(attr_value) and attr_name.startswith("on_"):
                handlers[attr_name[3:].replace("_", "-")] = attr_value

        handlers.update(attrs.get("handlers", {}))
        attrs["handlers"] = handlers
        return super().__new__(cls, name, bases, attrs)


class SectionBase(metaclass=SectionMeta):
    """A block of keyword lines.

    Subclasses provide methods such as ``on_vars`` which will be invoked with
    ``self`` and the :class:`Line` being read.
    """

    validator_cls = ValidationBase
    title = "file"

    def __init__(self):
        self.validator = self.validator_cls()
        self.data = {}

    @property
    def cleaned_data(self):
        return getattr(self.validator, "cleaned_data", {})

    def dispatch(self, line: Line):
        handler = self.handlers.get(line.keyword)
        if handler is None:
            raise ParseError(
                f"unknown key {line.keyword!r} in {self.title}",
                line=line.number,
                column=line.keyword_column,
                expected=", ".join(sorted(self.handlers)),
            )
        return handler(self, line)

    def validate(self):
        if self.validator:
            return self.validator.is_valid(self.data)
        return True
