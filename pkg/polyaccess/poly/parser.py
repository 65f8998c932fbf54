"""Expression grammar shared by the system-file reader and the tests.

Two flavours are built from the same pyparsing skeleton:

* polynomial: integers, rationals ``a/b``, variables, ``+ - * ^`` and
  parentheses; evaluates straight into a ``PolyElement`` of a VarTable.
* analytic: the same plus ``sin(v)``, ``cos(v)`` and division; evaluates into
  a sympy expression over plain symbols. Used for systems that are lifted by
  an immersion.
"""

import logging
from functools import lru_cache

import pyparsing as pp
import sympy

from polyaccess.core.exceptions import ParseError
from polyaccess.poly.core import VarTable, to_qq

logger = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()

FUNCTIONS = {"sin": sympy.sin, "cos": sympy.cos}


class _PolynomialBuilder:
    """Builds PolyElements of one VarTable."""

    allow_division = False
    allow_functions = False

    def __init__(self, table: VarTable):
        self.table = table
        self.names = set(table.names)

    def number(self, text):
        return self.table.const(to_qq(text))

    def variable(self, name):
        return self.table.gen(name)

    def function(self, name, arg):  # pragma: no cover - grammar excludes it
        raise NotImplementedError

    def exponent(self, value):
        if not value.is_ground:
            return None
        c = value.LC if value else 0
        if getattr(c, "denominator", 1) != 1 or c < 0:
            return None
        return int(c)

    def divide(self, a, b):  # pragma: no cover - grammar excludes it
        raise NotImplementedError


class _AnalyticBuilder:
    """Builds sympy expressions over plain symbols."""

    allow_division = True
    allow_functions = True

    def __init__(self, names):
        self.names = set(names)

    def number(self, text):
        return sympy.Rational(text)

    def variable(self, name):
        return sympy.Symbol(name)

    def function(self, name, arg):
        return FUNCTIONS[name](sympy.Symbol(arg))

    def exponent(self, value):
        if not (value.is_Integer and value >= 0):
            return None
        return int(value)

    def divide(self, a, b):
        return a / b


def _grammar(builder):
    # rational literals only where "/" is not an operator
    number = pp.Regex(r"\d+") if builder.allow_division else pp.Regex(r"\d+(?:/\d+)?")
    ident = pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*")

    def on_number(s, loc, toks):
        text = toks[0]
        if "/" in text and int(text.split("/")[1]) == 0:
            raise pp.ParseFatalException(s, loc, "zero denominator")
        return builder.number(text)

    def on_variable(s, loc, toks):
        name = toks[0]
        if name not in builder.names:
            raise pp.ParseFatalException(s, loc, f"unknown variable {name!r}")
        return builder.variable(name)

    number.set_parse_action(on_number)
    operand = number
    if builder.allow_functions:
        call = pp.one_of(list(FUNCTIONS)) + pp.Suppress("(") + ident + pp.Suppress(")")

        def on_call(s, loc, toks):
            name, arg = toks[0], toks[1]
            if arg not in builder.names:
                raise pp.ParseFatalException(s, loc, f"unknown variable {arg!r} in {name}()")
            return builder.function(name, arg)

        call.set_parse_action(on_call)
        operand = operand | call
    variable = ident.copy().set_parse_action(on_variable)
    operand = operand | variable

    def on_power(s, loc, toks):
        items = toks[0]
        result = items[-1]
        for base in reversed(items[:-1:2]):
            exp = builder.exponent(result)
            if exp is None:
                raise pp.ParseFatalException(s, loc, "exponent must be a non-negative integer")
            result = base ** exp
        return result

    def on_sign(s, loc, toks):
        sign, value = toks[0]
        return -value if sign == "-" else value

    def on_product(s, loc, toks):
        items = toks[0]
        result = items[0]
        for op, value in zip(items[1::2], items[2::2]):
            if op == "*":
                result = result * value
            else:
                if value == 0:
                    raise pp.ParseFatalException(s, loc, "division by zero")
                result = builder.divide(result, value)
        return result

    def on_sum(s, loc, toks):
        items = toks[0]
        result = items[0]
        for op, value in zip(items[1::2], items[2::2]):
            result = result + value if op == "+" else result - value
        return result

    mult_ops = pp.one_of("* /") if builder.allow_division else pp.Literal("*")
    expr = pp.infix_notation(
        operand,
        [
            (pp.Literal("^"), 2, pp.OpAssoc.RIGHT, on_power),
            (pp.one_of("+ -"), 1, pp.OpAssoc.RIGHT, on_sign),
            (mult_ops, 2, pp.OpAssoc.LEFT, on_product),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, on_sum),
        ],
    )
    return expr + pp.StringEnd()


@lru_cache(maxsize=64)
def _polynomial_grammar(table: VarTable):
    return _grammar(_PolynomialBuilder(table))


@lru_cache(maxsize=64)
def _analytic_grammar(names: tuple):
    return _grammar(_AnalyticBuilder(names))


def _run(grammar, text):
    try:
        return grammar.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        msg = exc.msg
        expected = None
        if msg.startswith("Expected "):
            expected = msg[len("Expected "):]
            msg = "syntax error"
        raise ParseError(msg, line=exc.lineno, column=exc.col, expected=expected) from None


def parse_polynomial(text: str, table: VarTable):
    """Parse polynomial text into a PolyElement over ``table``."""
    if not text.strip():
        raise ParseError("empty expression", expected="a polynomial")
    return _run(_polynomial_grammar(table), text)


def parse_expression(text: str, names):
    """Parse analytic text (sin, cos, division allowed) into a sympy expression."""
    if not text.strip():
        raise ParseError("empty expression", expected="an expression")
    return sympy.sympify(_run(_analytic_grammar(tuple(names)), text))


def format_expression(expr) -> str:
    """Print a sympy expression back in the analytic grammar."""
    return sympy.sstr(expr).replace("**", "^")
