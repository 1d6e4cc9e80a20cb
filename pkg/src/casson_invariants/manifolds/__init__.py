from casson_invariants.manifolds.parser import parse_manifold_expr, render
from casson_invariants.manifolds.specs import (
    ConnectedSum,
    ManifoldExpr,
    ManifoldLeaf,
    SeifertHSSpec,
    SmallSeifertSpec,
    TwistSurgerySpec,
    connected_sum,
    leaves,
)
from casson_invariants.manifolds.validation import validate

__all__ = [
    "ConnectedSum",
    "ManifoldExpr",
    "ManifoldLeaf",
    "SeifertHSSpec",
    "SmallSeifertSpec",
    "TwistSurgerySpec",
    "connected_sum",
    "leaves",
    "parse_manifold_expr",
    "render",
    "validate",
]
