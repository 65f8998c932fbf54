from .basis import ModuleBasis
from .chain import CAP_REACHED, STABILIZED, ChainResult, ChainStep, depth_cap, stabilize_chain
from .submodule import PolySubmodule, independent_columns, module_equal, module_member

__all__ = [
    "CAP_REACHED",
    "STABILIZED",
    "ChainResult",
    "ChainStep",
    "ModuleBasis",
    "PolySubmodule",
    "depth_cap",
    "independent_columns",
    "module_equal",
    "module_member",
    "stabilize_chain",
]
