"""Finitely generated submodules of R^n spanned by vector fields."""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from polyaccess.core.exceptions import VarTableMismatch
from polyaccess.module.basis import ModuleBasis
from polyaccess.poly.core import VarTable


@dataclass(frozen=True, eq=False)
class PolySubmodule:
    table: VarTable
    generators: tuple
    depth: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    @cached_property
    def groebner(self) -> ModuleBasis:
        basis = ModuleBasis(self.table)
        for X in self.generators:
            basis.add(X)
        return basis

    @cached_property
    def reduced_basis(self) -> tuple:
        return self.groebner.reduced()

    def contains(self, X) -> bool:
        return self.groebner.contains(X)

    __contains__ = contains

    def equals(self, other) -> bool:
        if self.table != other.table:
            raise VarTableMismatch("submodules over different variable tables")
        return self.reduced_basis == other.reduced_basis

    def extended(self, fields, depth=None) -> "PolySubmodule":
        return PolySubmodule(self.table, self.generators + tuple(fields), depth)

    def __len__(self):
        return len(self.generators)


def module_member(X, M: PolySubmodule) -> bool:
    return M.contains(X)


def module_equal(M1: PolySubmodule, M2: PolySubmodule) -> bool:
    return M1.equals(M2)


def independent_columns(fields, table: VarTable):
    """Fields that are not in the module spanned by the ones kept before them."""
    basis = ModuleBasis(table)
    return [X for X in fields if basis.add(X)]
