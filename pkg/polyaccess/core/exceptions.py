"""Exception hierarchy.

Every error raised on bad input derives from :class:`PolyaccessError`, which
is a :class:`ValueError`, so callers that only care about "invalid input" can
keep catching ``ValueError``.
"""


class PolyaccessError(ValueError):
    """Base class for all polyaccess input errors."""


class VarTableError(PolyaccessError):
    """Invalid variable table (duplicate names, unknown monomial order)."""


class VarTableMismatch(VarTableError):
    """Operands live over different variable tables."""


class MinorSizeError(PolyaccessError):
    """Requested minor size is outside ``1 <= l <= min(rows, cols)``."""


class ParseError(PolyaccessError):
    """Syntax error with a position inside the parsed text."""

    def __init__(self, message, line=1, column=1, expected=None):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        super().__init__(str(self))

    def __str__(self):
        text = f"line {self.line}, column {self.column}: {self.message}"
        if self.expected:
            text += f" (expected {self.expected})"
        return text

    def shifted(self, line, column_offset):
        """Return a copy positioned relative to an enclosing document."""
        cls = type(self)
        return cls(
            self.message,
            line=line,
            column=self.column + column_offset,
            expected=self.expected,
        )


class ArityError(ParseError):
    """Component count does not match the ``vars`` arity."""


class ImmersionError(PolyaccessError):
    """Immersion map violates its normal form or its relations."""


class ClosureViolation(ImmersionError):
    """Rewriting into target variables left a transcendental residue."""

    def __init__(self, message, residue=None):
        self.residue = residue
        if residue is not None:
            message = f"{message}: {residue}"
        super().__init__(message)
