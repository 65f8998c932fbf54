from .ideal import Ideal, groebner_basis, ideal_equal, member, power_certificate
from .invariance import InvarianceCheck, closure_rounds, invariant_closure, is_invariant
from .radical import Unsupported, radical_monomial, real_radical_restricted

__all__ = [
    "Ideal",
    "InvarianceCheck",
    "Unsupported",
    "closure_rounds",
    "groebner_basis",
    "ideal_equal",
    "invariant_closure",
    "is_invariant",
    "member",
    "power_certificate",
    "radical_monomial",
    "real_radical_restricted",
]
