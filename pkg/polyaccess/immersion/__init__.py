from .mapping import AnalyticSystem, ImmersionMap
from .pushforward import (
    ImmersedSystem,
    ImmersionCheck,
    Pullback,
    derive_immersed,
    describe_in_source,
    pull_back_singular,
    verify_bracket_pushforward,
    verify_immersion,
)

__all__ = [
    "AnalyticSystem",
    "ImmersedSystem",
    "ImmersionCheck",
    "ImmersionMap",
    "Pullback",
    "derive_immersed",
    "describe_in_source",
    "pull_back_singular",
    "verify_bracket_pushforward",
    "verify_immersion",
]
