from casson_invariants.oracle.counting import (
    count_diagonal_characters,
    count_sl_irreducible,
    count_triangle_reducible,
)
from casson_invariants.oracle.eigen import (
    EigenClass,
    SectorSpec,
    is_reducible_triple,
    sector_eigen_classes,
)
from casson_invariants.oracle.verification import (
    CHECKS,
    Check,
    CheckStatus,
    VerificationReport,
    verify_census,
)

__all__ = [
    "CHECKS",
    "Check",
    "CheckStatus",
    "EigenClass",
    "SectorSpec",
    "VerificationReport",
    "count_diagonal_characters",
    "count_sl_irreducible",
    "count_triangle_reducible",
    "is_reducible_triple",
    "sector_eigen_classes",
    "verify_census",
]
