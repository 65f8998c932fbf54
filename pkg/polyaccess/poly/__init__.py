from .core import (
    ORDERS,
    VarTable,
    add,
    evaluate,
    evaluate_qq,
    format_poly,
    from_qq,
    is_monomial,
    monomial_content,
    mul,
    partial_derivative,
    squarefree_part,
    sub,
    terms,
    to_qq,
    total_degree,
)
from .parser import format_expression, parse_expression, parse_polynomial

__all__ = [
    "ORDERS",
    "VarTable",
    "add",
    "evaluate",
    "evaluate_qq",
    "format_expression",
    "format_poly",
    "from_qq",
    "is_monomial",
    "monomial_content",
    "mul",
    "parse_expression",
    "parse_polynomial",
    "partial_derivative",
    "squarefree_part",
    "sub",
    "terms",
    "to_qq",
    "total_degree",
]
