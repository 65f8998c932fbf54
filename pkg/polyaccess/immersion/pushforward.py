"""Pushforward of analytic systems and pull-back of singular sets."""

import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import sympy
from numpy.random import default_rng

from polyaccess.conf import settings
from polyaccess.core.exceptions import ClosureViolation
from polyaccess.ideal.ideal import Ideal
from polyaccess.ideal.radical import Unsupported, real_radical_restricted
from polyaccess.lie.fields import SystemSpec, VectorField, lie_bracket
from polyaccess.poly.core import format_poly

from .mapping import TRIG, AnalyticSystem, ImmersionMap, lie_derivative_expr

logger = logging.getLogger(__name__)

ALGEBRAIC_PROOF = "algebraic proof"
SAMPLED_WITNESS = "sampled witness"
SAMPLING_ONLY = "sampling only"


@dataclass(frozen=True)
class ImmersedSystem:
    system: SystemSpec
    source: AnalyticSystem
    immersion: ImmersionMap


class ImmersionCheck(NamedTuple):
    ok: bool
    witness: Optional[tuple] = None  # (target index, field label)


def pushforward(source: AnalyticSystem, T: ImmersionMap, components, label) -> VectorField:
    syms = source.symbols
    return VectorField(
        T.target,
        tuple(T.rewrite(lie_derivative_expr(components, entry, syms)) for entry in T.entries),
        label,
    )


def derive_immersed(source: AnalyticSystem, T: ImmersionMap) -> ImmersedSystem:
    """Polynomial system on the target variables whose fields push forward the source ones."""
    if tuple(source.source) != T.source:
        raise ClosureViolation(f"system variables {source.source} differ from map source {T.source}")
    known = set(T.entries)
    for label, comps in source.fields:
        for c in comps:
            for atom in c.atoms(*TRIG):
                if atom not in known:
                    raise ClosureViolation(
                        f"field {label} uses {atom}, which the immersion does not declare", residue=atom
                    )
    drift = pushforward(source, T, source.drift, source.drift_label)
    inputs = tuple(pushforward(source, T, comps, label) for label, comps in source.inputs)
    logger.info("immersed %d-dimensional system into %d dimensions", T.n, T.target.n)
    return ImmersedSystem(SystemSpec(T.target, drift, inputs), source, T)


def verify_immersion(source: AnalyticSystem, T: ImmersionMap, imm: ImmersedSystem) -> ImmersionCheck:
    """Check ``L_h T_j = h_hat_j o T`` on the source side for every field."""
    syms = source.symbols
    hats = (imm.system.drift, *imm.system.inputs)
    for (label, comps), hat in zip(source.fields, hats):
        for j, entry in enumerate(T.entries):
            lhs = lie_derivative_expr(comps, entry, syms)
            if not _is_zero(lhs - T.substitute(hat[j])):
                logger.info("pushforward identity fails for %s at %s", label, T.target.names[j])
                return ImmersionCheck(False, (j, label))
    return ImmersionCheck(True)


def verify_bracket_pushforward(imm: ImmersedSystem, first: str, second: str) -> bool:
    """Pushforward of a source bracket equals the bracket of the pushforwards mod R."""
    source, T = imm.source, imm.immersion
    bracket = source.bracket(source.named(first), source.named(second))
    pushed = pushforward(source, T, bracket, f"[{first},{second}]")
    fields = imm.system.named_fields
    hat = lie_bracket(fields[first], fields[second])
    R = T.relation_ideal
    return all(R.contains(a - b) for a, b in zip(pushed, hat))


@dataclass
class Pullback:
    ideal: Ideal
    empty: Optional[bool]
    grade: str
    witness: Optional[tuple] = None
    source: list = field(default_factory=list)

    def to_dict(self):
        return {
            "generators": [format_poly(g) for g in self.ideal.basis],
            "empty": self.empty,
            "grade": self.grade,
            "witness": None if self.witness is None else [str(a) for a in self.witness],
            "source": list(self.source),
        }


def _is_zero(value) -> bool:
    value = sympy.sympify(value)
    if value == 0:
        return True
    value = sympy.simplify(value)
    return value == 0 or value.equals(0) is True


def _witness_search(ideal: Ideal, T: ImmersionMap, samples, seed):
    rng = default_rng(seed)
    gens = [g.as_expr() for g in ideal.basis]
    zs = T.target_symbols
    for _ in range(samples):
        point = [0 if rng.random() < 0.5 else int(rng.integers(-5, 6)) for _ in range(T.n)]
        image = T.evaluate(point)
        values = dict(zip(zs, image))
        if all(_is_zero(g.xreplace(values)) for g in gens):
            return tuple(point)
    return None


def pull_back_singular(imm: ImmersedSystem, singular: Ideal, T: ImmersionMap, samples=None, seed=None) -> Pullback:
    """Intersect an immersed singular set with the image of ``T``.

    The returned ideal is ``singular + R``. Emptiness is proven when that
    sum, or the sum with the real radical of ``singular``, is the unit ideal.
    Non-emptiness is shown by a source point whose image lies on the variety.
    """
    samples = settings.SAMPLE_POINTS if samples is None else samples
    seed = settings.SEED if seed is None else seed
    R = T.relation_ideal
    total = singular.sum(R).reduced()
    if not total.is_proper:
        return Pullback(total, True, ALGEBRAIC_PROOF)
    radical = real_radical_restricted(singular)
    if not isinstance(radical, Unsupported) and not radical.sum(R).is_proper:
        return Pullback(total, True, ALGEBRAIC_PROOF)
    source = describe_in_source(total, T)
    witness = _witness_search(total, T, samples, seed)
    if witness is not None:
        return Pullback(total, False, SAMPLED_WITNESS, witness, source)
    return Pullback(total, None, SAMPLING_ONLY, None, source)


def describe_in_source(ideal: Ideal, T: ImmersionMap) -> list:
    """Generators of ``ideal`` written in the source variables."""
    out = []
    for g in ideal.basis:
        expr = sympy.simplify(T.substitute(g))
        out.append(f"{sympy.sstr(expr).replace('**', '^')} = 0")
    return out
