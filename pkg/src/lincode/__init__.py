"""Minimum distance and decoding of linear codes over GF(q) by Gaussian elimination."""

from lincode._backend import BACKEND
from lincode.code import (
    EnumeratorPolynomial,
    LinearCode,
    WeightDistribution,
    cyclic_generator_matrix,
    macwilliams_transform,
    new_code,
)
from lincode.decoder import AlreadyCodeword, Decoded, NonDecodable, decode
from lincode.errors import (
    BudgetExceededError,
    DegenerateGeneratorError,
    FieldMismatchError,
    InconsistentDistanceError,
    InternalConsistencyError,
    LincodeError,
    ShapeError,
)
from lincode.gf import FieldElement, PrimeField
from lincode.linalg import FieldMatrix, nullspace_basis, rank, row_echelon
from lincode.mindist import DistanceReport, ProjectivePoint, level_scan, min_distance

__all__ = [
    "BACKEND",
    "AlreadyCodeword",
    "BudgetExceededError",
    "Decoded",
    "DegenerateGeneratorError",
    "DistanceReport",
    "EnumeratorPolynomial",
    "FieldElement",
    "FieldMatrix",
    "FieldMismatchError",
    "InconsistentDistanceError",
    "InternalConsistencyError",
    "LincodeError",
    "LinearCode",
    "NonDecodable",
    "PrimeField",
    "ProjectivePoint",
    "ShapeError",
    "WeightDistribution",
    "cyclic_generator_matrix",
    "decode",
    "level_scan",
    "macwilliams_transform",
    "min_distance",
    "new_code",
    "nullspace_basis",
    "rank",
    "row_echelon",
]
