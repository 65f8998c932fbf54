"""Evaluate bracket words such as ``[g1,[f,g2]]`` against a system."""

from functools import lru_cache

import pyparsing as pp

from polyaccess.core.exceptions import ParseError
from polyaccess.lie.fields import SystemSpec, lie_bracket


@lru_cache(maxsize=1)
def _word_grammar():
    word = pp.Forward()
    name = pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*")
    bracket = pp.Group(pp.Suppress("[") + word + pp.Suppress(",") + word + pp.Suppress("]"))
    word <<= bracket | name
    return word + pp.StringEnd()


def evaluate_word(word: str, system: SystemSpec):
    """Return the vector field named by a bracket word."""
    try:
        tree = _word_grammar().parse_string(word, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise ParseError("bad bracket word", line=exc.lineno, column=exc.col, expected=exc.msg) from None
    fields = system.named_fields

    def build(node):
        if isinstance(node, str):
            if node not in fields:
                raise ParseError(f"unknown field {node!r}", expected=", ".join(fields))
            return fields[node]
        return lie_bracket(build(node[0]), build(node[1]))

    return build(tree)
