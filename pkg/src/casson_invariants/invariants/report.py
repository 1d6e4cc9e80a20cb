from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

from casson_invariants.arithmetic import (
    AbelianGroup,
    QuarterRational,
    two_torsion_order,
)
from casson_invariants.invariants.census import CharacterCensus, bb_census
from casson_invariants.invariants.expressions import (
    h1_expr,
    lambda_psl_expr,
    lambda_sl_expr,
)
from casson_invariants.invariants.formulas import (
    BaseGeometry,
    base_geometry,
    sl_formula_proved,
)
from casson_invariants.manifolds import (
    ManifoldExpr,
    SmallSeifertSpec,
    leaves,
    render,
)

logger = logging.getLogger(__name__)


class Caveat(str, enum.Enum):
    """Flags qualifying how the values of a report should be read."""

    # Small Seifert formulas assume a non-Haken manifold, never checked here
    NON_HAKEN_UNCHECKED = "non-haken-unchecked"
    NON_HYPERBOLIC_BASE = "non-hyperbolic-base"
    UNPROVED_CASE = "unproved-sl-case"
    CONJECTURAL_RESIDUAL = "conjectural-residual"
    LAMBDA_ZERO_ANOMALY = "lambda-zero-anomaly"


@dataclass(frozen=True)
class InvariantReport:
    """All invariants of one manifold expression.

    ``lambda_zero`` is ``lambda_sl / |H^1(M; Z/2)|``, the contribution of
    characters that lift to ``SL_2(C)``. ``residual`` is
    ``lambda_psl - lambda_zero``, conjecturally the contribution of the
    characters that do not lift; it is reported, never asserted.
    """

    manifold: str
    lambda_psl: QuarterRational
    lambda_sl: QuarterRational | None
    h1: AbelianGroup
    h1_z2_order: int
    lambda_zero: QuarterRational | None
    residual: QuarterRational | None
    caveats: tuple[Caveat, ...] = ()
    census: CharacterCensus | None = field(default=None, compare=False)


def leaf_caveats(expr: ManifoldExpr) -> list[Caveat]:
    """Caveats contributed by the small Seifert leaves of an expression.

    Args:
        expr (ManifoldExpr): The expression.

    Returns:
        list[Caveat]: Each caveat once, in order of first appearance.
    """
    caveats: list[Caveat] = []
    for leaf in leaves(expr):
        if not isinstance(leaf, SmallSeifertSpec):
            continue
        flags = [Caveat.NON_HAKEN_UNCHECKED]
        if base_geometry(*leaf.orders) is not BaseGeometry.HYPERBOLIC:
            flags.append(Caveat.NON_HYPERBOLIC_BASE)
        if not sl_formula_proved(leaf):
            flags.append(Caveat.UNPROVED_CASE)
        caveats.extend(flag for flag in flags if flag not in caveats)
    return caveats


def decompose_lambda_zero(expr: ManifoldExpr) -> InvariantReport:
    """Computes every invariant of an expression and splits the
    ``PSL_2(C)`` invariant into ``lambda_zero`` and a residual.

    Args:
        expr (ManifoldExpr): A validated expression or leaf.

    Returns:
        InvariantReport: The report. When ``lambda_sl`` divided by
            ``|H^1(M; Z/2)|`` is not a multiple of 1/4, ``lambda_zero`` and
            ``residual`` are None and the report carries
            ``Caveat.LAMBDA_ZERO_ANOMALY``.
    """
    lambda_psl = lambda_psl_expr(expr)
    lambda_sl = lambda_sl_expr(expr)
    h1 = h1_expr(expr)
    z2_order = two_torsion_order(h1)
    caveats = leaf_caveats(expr)

    lambda_zero = lambda_sl.try_divide(z2_order)
    residual = None
    if lambda_zero is None:
        logger.warning(
            "lambda_SL = %s is not divisible by |H^1(M; Z/2)| = %d in "
            "quarter-integers for %s",
            lambda_sl,
            z2_order,
            render(expr),
        )
        caveats.append(Caveat.LAMBDA_ZERO_ANOMALY)
    else:
        residual = lambda_psl - lambda_zero
        if residual != 0:
            caveats.append(Caveat.CONJECTURAL_RESIDUAL)

    census = bb_census(expr) if isinstance(expr, SmallSeifertSpec) else None
    return InvariantReport(
        manifold=render(expr),
        lambda_psl=lambda_psl,
        lambda_sl=lambda_sl,
        h1=h1,
        h1_z2_order=z2_order,
        lambda_zero=lambda_zero,
        residual=residual,
        caveats=tuple(caveats),
        census=census,
    )
