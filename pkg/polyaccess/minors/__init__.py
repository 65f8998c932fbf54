from .matrix import FieldMatrix, MinorIdeal, build_matrix, determinant, minor_ideal, numeric_rank
from .rank import RankCertificate, certified_rank, generic_rank, random_point

__all__ = [
    "FieldMatrix",
    "MinorIdeal",
    "RankCertificate",
    "build_matrix",
    "certified_rank",
    "determinant",
    "generic_rank",
    "minor_ideal",
    "numeric_rank",
    "random_point",
]
