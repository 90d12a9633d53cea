"""Exact construction and verification of (H, beta)-Lie algebras, Lie
coalgebras and bialgebras, matched pairs and cocycle twists, for H the group
algebra of a finite abelian group."""

from .colie import (
    CobracketTable,
    GradedCoalgebra,
    beta_cocommutator,
    bialgebra_verify,
    coassoc_verify,
    colie_verify,
)
from .errors import FieldMismatch, HBetaError, NotClosed, PreconditionError
from .gradedalg import (
    BilinearTable,
    GradedAlgebra,
    GradedBasis,
    GradedLieAlgebra,
    assoc_verify,
    beta_commutator,
    compare_tables,
    grading_check,
    lie_verify,
    twist_algebra,
    twist_lie,
)
from .grading import (
    Bicharacter,
    FiniteAbelianGroup,
    TwoCocycle,
    bichar_from_exponents,
    bichar_verify,
    cocycle_verify,
    group_make,
    twist_bicharacter,
)
from .matched import (
    CobrackedPair,
    LeftAction,
    MatchedPair,
    RightAction,
    bb1_verify,
    bb2_verify,
    bb3_verify,
    dcs_bialgebra,
    double_cross_sum,
    iso_check,
    left_module_verify,
    matched_verify,
    module_lie_algebra_verify,
    module_lie_coalgebra_verify,
    right_module_lie_coalgebra_verify,
    right_module_verify,
    split_from_decomposition,
    twist_left_action,
    twist_matched_pair,
    twist_right_action,
)
from .report import Check, VerificationReport, Witness
from .scalars import FieldDescriptor, Scalar, root_of_unity_check, scalar_arith

__version__ = "0.1.0"

Q = FieldDescriptor.rationals()


def GF(p: int) -> FieldDescriptor:
    return FieldDescriptor.prime(p)


__all__ = [
    "Bicharacter",
    "BilinearTable",
    "Check",
    "CobrackedPair",
    "CobracketTable",
    "FieldDescriptor",
    "FieldMismatch",
    "FiniteAbelianGroup",
    "GF",
    "GradedAlgebra",
    "GradedBasis",
    "GradedCoalgebra",
    "GradedLieAlgebra",
    "HBetaError",
    "LeftAction",
    "MatchedPair",
    "NotClosed",
    "PreconditionError",
    "Q",
    "RightAction",
    "Scalar",
    "TwoCocycle",
    "VerificationReport",
    "Witness",
    "__version__",
    "assoc_verify",
    "bb1_verify",
    "bb2_verify",
    "bb3_verify",
    "beta_cocommutator",
    "beta_commutator",
    "bialgebra_verify",
    "bichar_from_exponents",
    "bichar_verify",
    "coassoc_verify",
    "cocycle_verify",
    "colie_verify",
    "compare_tables",
    "dcs_bialgebra",
    "double_cross_sum",
    "grading_check",
    "group_make",
    "iso_check",
    "left_module_verify",
    "lie_verify",
    "matched_verify",
    "module_lie_algebra_verify",
    "module_lie_coalgebra_verify",
    "right_module_lie_coalgebra_verify",
    "right_module_verify",
    "root_of_unity_check",
    "scalar_arith",
    "split_from_decomposition",
    "twist_algebra",
    "twist_bicharacter",
    "twist_left_action",
    "twist_lie",
    "twist_matched_pair",
    "twist_right_action",
]
