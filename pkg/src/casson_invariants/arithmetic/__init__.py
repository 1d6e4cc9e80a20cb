from casson_invariants.arithmetic.homology import (
    AbelianGroup,
    IntMatrix,
    smith_normal_form,
    two_torsion_order,
)
from casson_invariants.arithmetic.integers import (
    floor_half,
    gcd_all,
    lcm_all,
    pairwise_coprime,
    two_adic_split,
)
from casson_invariants.arithmetic.quarter import ZERO, QuarterRational

__all__ = [
    "AbelianGroup",
    "IntMatrix",
    "QuarterRational",
    "ZERO",
    "floor_half",
    "gcd_all",
    "lcm_all",
    "pairwise_coprime",
    "smith_normal_form",
    "two_adic_split",
    "two_torsion_order",
]
