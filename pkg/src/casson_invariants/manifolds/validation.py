import logging
import math
from typing import TypeVar

from casson_invariants.exceptions import ManifoldValidationError
from casson_invariants.manifolds.specs import (
    ConnectedSum,
    ManifoldExpr,
    SeifertHSSpec,
    SmallSeifertSpec,
    TwistSurgerySpec,
)

logger = logging.getLogger(__name__)

SHS_FORMULA = "Seifert homology sphere formula"
SSF_FORMULA = "small Seifert formulas"
TWIST_FORMULA = "twist knot surgery formulas"

ExprT = TypeVar("ExprT", bound=ManifoldExpr)


def validate(spec: ExprT) -> ExprT:
    """Checks every hypothesis the closed-form invariants need.

    Validation is side-effect free and idempotent: a valid spec is returned
    unchanged, and validating it again returns it again. Connected sums are
    valid when every leaf is.

    Args:
        spec (ExprT): A manifold spec or expression.

    Raises:
        ManifoldValidationError: Naming the first violated hypothesis.
        TypeError: If ``spec`` is not a manifold spec.

    Returns:
        ExprT: The same spec.
    """
    if isinstance(spec, ConnectedSum):
        validate(spec.left)
        validate(spec.right)
    elif isinstance(spec, SeifertHSSpec):
        _validate_seifert_hs(spec)
    elif isinstance(spec, SmallSeifertSpec):
        _validate_small_seifert(spec)
    elif isinstance(spec, TwistSurgerySpec):
        _validate_twist(spec)
    else:
        raise TypeError(f"not a manifold spec: {spec!r}")
    logger.debug("Validated %r", spec)
    return spec


def _validate_seifert_hs(spec: SeifertHSSpec) -> None:
    values = spec.multiplicities
    if not values:
        raise ManifoldValidationError(
            "no multiplicities", SHS_FORMULA, {"multiplicities": values}
        )
    for value in values:
        if value < 1:
            raise ManifoldValidationError(
                "multiplicity < 1", SHS_FORMULA, {"a": value}
            )
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            divisor = math.gcd(values[i], values[j])
            if divisor != 1:
                raise ManifoldValidationError(
                    "not pairwise coprime",
                    SHS_FORMULA,
                    {
                        f"a{i + 1}": values[i],
                        f"a{j + 1}": values[j],
                        "gcd": divisor,
                    },
                )


def _validate_small_seifert(spec: SmallSeifertSpec) -> None:
    for name, order in zip("pqr", spec.orders):
        if order < 2:
            raise ManifoldValidationError(
                f"{name} < 2", SSF_FORMULA, {name: order}
            )
    for order_name, coefficient_name, order, coefficient in zip(
        "pqr", "abc", spec.orders, spec.coefficients
    ):
        if math.gcd(coefficient, order) != 1:
            raise ManifoldValidationError(
                f"gcd({coefficient_name},{order_name}) ≠ 1",
                SSF_FORMULA,
                {coefficient_name: coefficient, order_name: order},
            )
    if spec.euler_numerator == 0:
        raise ManifoldValidationError(
            "aqr+bpr+cpq = 0 (not a rational homology sphere)",
            SSF_FORMULA,
            dict(zip("pqrabc", spec.orders + spec.coefficients)),
        )


def _validate_twist(spec: TwistSurgerySpec) -> None:
    if spec.xi < 1:
        raise ManifoldValidationError("xi < 1", TWIST_FORMULA, {"xi": spec.xi})
    if spec.q == 0:
        raise ManifoldValidationError("q = 0", TWIST_FORMULA, {"q": spec.q})
    if spec.p % 2 == 0:
        raise ManifoldValidationError(
            "p even (strict boundary slope risk)",
            TWIST_FORMULA,
            {"xi": spec.xi, "p": spec.p},
        )
    if math.gcd(spec.p, spec.q) != 1:
        raise ManifoldValidationError(
            "gcd(p,q) ≠ 1", TWIST_FORMULA, {"p": spec.p, "q": spec.q}
        )
