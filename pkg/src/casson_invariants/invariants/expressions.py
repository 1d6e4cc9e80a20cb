import logging

from casson_invariants.arithmetic import (
    AbelianGroup,
    QuarterRational,
    two_torsion_order,
)
from casson_invariants.exceptions import NoClosedFormError
from casson_invariants.invariants.formulas import (
    h1_small_seifert,
    h1_twist_surgery,
    lambda_psl_seifert_hs,
    lambda_psl_small_seifert,
    lambda_psl_twist,
    lambda_sl_small_seifert,
)
from casson_invariants.manifolds import (
    ConnectedSum,
    ManifoldExpr,
    ManifoldLeaf,
    SeifertHSSpec,
    SmallSeifertSpec,
    TwistSurgerySpec,
    leaves,
)

logger = logging.getLogger(__name__)


def lambda_psl_leaf(leaf: ManifoldLeaf) -> QuarterRational:
    """The ``PSL_2(C)`` invariant of a single summand.

    Args:
        leaf (ManifoldLeaf): A validated leaf.

    Raises:
        NoClosedFormError: If the leaf is of no supported family.

    Returns:
        QuarterRational: The invariant.
    """
    if isinstance(leaf, SeifertHSSpec):
        return lambda_psl_seifert_hs(leaf)
    if isinstance(leaf, SmallSeifertSpec):
        return lambda_psl_small_seifert(leaf)
    if isinstance(leaf, TwistSurgerySpec):
        return lambda_psl_twist(leaf)
    raise NoClosedFormError(f"No PSL(2,C) closed form for {leaf!r}")


def lambda_sl_leaf(leaf: ManifoldLeaf) -> QuarterRational:
    # Homology spheres and odd-p surgeries are Z/2 homology spheres, where
    # both invariants agree
    if isinstance(leaf, SeifertHSSpec):
        return lambda_psl_seifert_hs(leaf)
    if isinstance(leaf, SmallSeifertSpec):
        return lambda_sl_small_seifert(leaf)
    if isinstance(leaf, TwistSurgerySpec):
        return lambda_psl_twist(leaf)
    raise NoClosedFormError(f"No SL(2,C) closed form for {leaf!r}")


def h1_leaf(leaf: ManifoldLeaf) -> AbelianGroup:
    """``H_1`` of a single summand; homology spheres have none."""
    if isinstance(leaf, SeifertHSSpec):
        return AbelianGroup.trivial()
    if isinstance(leaf, SmallSeifertSpec):
        return h1_small_seifert(leaf)
    if isinstance(leaf, TwistSurgerySpec):
        return h1_twist_surgery(leaf)
    raise NoClosedFormError(f"No homology formula for {leaf!r}")


def lambda_psl_expr(expr: ManifoldExpr) -> QuarterRational:
    """The ``PSL_2(C)`` invariant of a connected sum, which is additive over
    rational homology spheres.

    Args:
        expr (ManifoldExpr): A validated expression.

    Raises:
        NoClosedFormError: If a leaf has no closed form.

    Returns:
        QuarterRational: The sum of the leaf invariants.
    """
    return sum(
        (lambda_psl_leaf(leaf) for leaf in leaves(expr)), QuarterRational(0)
    )


def _lambda_sl_and_z2(expr: ManifoldExpr) -> tuple[QuarterRational, int]:
    if isinstance(expr, ConnectedSum):
        left, left_z2 = _lambda_sl_and_z2(expr.left)
        right, right_z2 = _lambda_sl_and_z2(expr.right)
        return right_z2 * left + left_z2 * right, left_z2 * right_z2
    return lambda_sl_leaf(expr), two_torsion_order(h1_leaf(expr))


def lambda_sl_expr(expr: ManifoldExpr) -> QuarterRational:
    """The ``SL_2(C)`` invariant of a connected sum.

    For a sum ``A # B`` this is
    ``|H^1(B; Z/2)| * lambda(A) + |H^1(A; Z/2)| * lambda(B)``, folded over
    the tree with ``|H^1(A # B; Z/2)| = |H^1(A; Z/2)| * |H^1(B; Z/2)|``.

    Args:
        expr (ManifoldExpr): A validated expression.

    Raises:
        NoClosedFormError: If a leaf has no closed form.

    Returns:
        QuarterRational: The invariant.
    """
    value, _ = _lambda_sl_and_z2(expr)
    return value


def h1_expr(expr: ManifoldExpr) -> AbelianGroup:
    """``H_1`` of a connected sum, the direct sum over its leaves."""
    group = AbelianGroup.trivial()
    for leaf in leaves(expr):
        group = group.direct_sum(h1_leaf(leaf))
    return group
