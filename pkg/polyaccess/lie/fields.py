"""Polynomial vector fields, control-affine systems and Lie derivatives."""

import logging
from dataclasses import dataclass, field

from polyaccess.core.exceptions import PolyaccessError, VarTableMismatch
from polyaccess.poly.core import VarTable, evaluate, format_poly, total_degree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VectorField:
    """A tuple of ``n`` polynomials over one VarTable."""

    table: VarTable
    components: tuple
    label: str = field(default="X", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if len(self.components) != self.table.n:
            raise VarTableMismatch(
                f"field {self.label} has {len(self.components)} components, "
                f"expected {self.table.n}"
            )
        self.table.check(*self.components)

    @classmethod
    def zero(cls, table: VarTable, label="0"):
        return cls(table, (table.zero,) * table.n, label)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __add__(self, other):
        self._check(other)
        return VectorField(
            self.table,
            tuple(a + b for a, b in zip(self, other)),
            f"{self.label}+{other.label}",
        )

    def __sub__(self, other):
        self._check(other)
        return VectorField(
            self.table,
            tuple(a - b for a, b in zip(self, other)),
            f"{self.label}-{other.label}",
        )

    def scaled(self, p, label=None):
        """Return ``p * self`` for a polynomial or scalar ``p``."""
        if not hasattr(p, "ring"):
            p = self.table.const(p)
        self.table.check(p)
        return VectorField(self.table, tuple(p * c for c in self), label or f"({format_poly(p)}){self.label}")

    def relabel(self, label):
        return VectorField(self.table, self.components, label)

    def _check(self, other):
        if self.table != other.table:
            raise VarTableMismatch(f"fields {self.label} and {other.label} use different tables")

    @property
    def is_zero(self) -> bool:
        return not any(self.components)

    @property
    def degree(self) -> int:
        return max(total_degree(c) for c in self.components)

    def evaluate(self, point):
        return [evaluate(c, point) for c in self.components]

    def projective_key(self):
        """Key shared by all nonzero scalar multiples of this field."""
        lead = next(c for c in self.components if c)
        scale = 1 / lead.LC
        return tuple(frozenset((c * scale).items()) for c in self.components)

    def format(self) -> str:
        return "(" + ", ".join(format_poly(c) for c in self.components) + ")"


def lie_derivative(X: VectorField, p):
    """``L_X p = sum_i X_i * dp/dx_i``."""
    X.table.check(p)
    result = X.table.zero
    for x, component in zip(X.table.ring.gens, X.components):
        if component:
            result += component * p.diff(x)
    return result


def lie_bracket(X: VectorField, Y: VectorField, label=None) -> VectorField:
    """``[X, Y]_i = L_X Y_i - L_Y X_i``."""
    X._check(Y)
    components = tuple(lie_derivative(X, y) - lie_derivative(Y, x) for x, y in zip(X, Y))
    return VectorField(X.table, components, label or f"[{X.label},{Y.label}]")


@dataclass(frozen=True)
class SystemSpec:
    """A control-affine system ``x' = f(x) + sum_j g_j(x) u_j``."""

    table: VarTable
    drift: VectorField
    inputs: tuple

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        if not self.inputs:
            raise PolyaccessError("a system needs at least one input field")
        for X in (self.drift, *self.inputs):
            if X.table != self.table:
                raise VarTableMismatch(f"field {X.label} is not over the system variables")
        labels = [g.label for g in self.inputs]
        if len(set(labels)) != len(labels) or self.drift.label in labels:
            raise PolyaccessError(f"field labels must be distinct: {[self.drift.label, *labels]}")

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def m(self) -> int:
        return len(self.inputs)

    @property
    def is_driftless(self) -> bool:
        return self.drift.is_zero

    @property
    def operators(self) -> tuple:
        """Fields used to bracket with: the drift when nonzero, then the inputs."""
        if self.is_driftless:
            return self.inputs
        return (self.drift, *self.inputs)

    @property
    def named_fields(self) -> dict:
        return {X.label: X for X in (self.drift, *self.inputs)}

    @property
    def degree(self) -> int:
        return max(X.degree for X in (self.drift, *self.inputs))

    def with_order(self, order: str) -> "SystemSpec":
        """Same system with its polynomials moved to another monomial order."""
        table = self.table.with_order(order)

        def move(X):
            return VectorField(table, tuple(table.convert(c) for c in X), X.label)

        return SystemSpec(table, move(self.drift), tuple(move(g) for g in self.inputs))
