from .family import BracketFamily, Mode, extend_family, family_at, initial_family, iter_families
from .fields import SystemSpec, VectorField, lie_bracket, lie_derivative
from .words import evaluate_word

__all__ = [
    "BracketFamily",
    "Mode",
    "SystemSpec",
    "VectorField",
    "evaluate_word",
    "extend_family",
    "family_at",
    "initial_family",
    "iter_families",
    "lie_bracket",
    "lie_derivative",
]
