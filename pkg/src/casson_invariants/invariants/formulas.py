"""Closed-form Casson invariants and homology of the supported families."""

from __future__ import annotations

import enum
import itertools
import logging
import math
from fractions import Fraction

from casson_invariants.arithmetic import (
    AbelianGroup,
    IntMatrix,
    QuarterRational,
    floor_half,
    pairwise_coprime,
    two_adic_split,
)
from casson_invariants.exceptions import IntegralityError
from casson_invariants.invariants.census import sigma_pair, sigma_triple
from casson_invariants.manifolds import (
    SeifertHSSpec,
    SmallSeifertSpec,
    TwistSurgerySpec,
)

logger = logging.getLogger(__name__)


class Xi3Rule(enum.Enum):
    """Which coefficient of the ``gcd(pq, pr, qr)`` term to use in the
    ``SL_2(C)`` formula for small Seifert spaces.

    ``LCM_PARITY`` sets it to 2 exactly when, after ordering the cone points
    by descending 2-adic valuation, ``alpha = beta > gamma``; this is when
    the ``-I`` sector has reducible characters, i.e. when exactly two of
    ``lcm(p,q,r)/p``, ``lcm(p,q,r)/q`` and ``lcm(p,q,r)/r`` are odd.
    ``PUBLISHED`` also sets it to 2 when ``alpha > beta = gamma``; it is
    kept to diagnose the difference against enumeration.
    """

    LCM_PARITY = "lcm-parity"
    PUBLISHED = "published"


class BaseGeometry(str, enum.Enum):
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


class TheoremCase(str, enum.Enum):
    """Parity case of a small Seifert space for the ``SL_2(C)`` formula.

    ``CASE_3`` (all cone orders even) and ``Z2_HOMOLOGY_SPHERE`` are proved,
    ``CASE_1`` and ``CASE_2`` are not. ``ODD_ORDERS`` is the remaining
    all-odd case with coefficients of mixed parity. The formula has been
    checked, not proved, whenever at most one cone order is even, and that
    includes this case.
    """

    Z2_HOMOLOGY_SPHERE = "z2-homology-sphere"
    CASE_1 = "case-1"
    CASE_2 = "case-2"
    CASE_3 = "case-3"
    ODD_ORDERS = "odd-orders"


def lambda_psl_seifert_hs(spec: SeifertHSSpec) -> QuarterRational:
    """The Casson invariant of a Seifert fibered homology sphere, i.e. the
    sum of ``(a_i - 1)(a_j - 1)(a_k - 1) / 4`` over all ``i < j < k``.

    The manifold is an integral homology sphere, so this is both the
    ``PSL_2(C)`` and the ``SL_2(C)`` invariant.

    Args:
        spec (SeifertHSSpec): A validated spec.

    Returns:
        QuarterRational: The invariant; zero for fewer than three
            multiplicities.
    """
    return QuarterRational(
        sum(
            (x - 1) * (y - 1) * (z - 1)
            for x, y, z in itertools.combinations(spec.multiplicities, 3)
        )
    )


def lambda_psl_twist(spec: TwistSurgerySpec) -> QuarterRational:
    """The Casson invariant of ``p/q`` surgery on a twist knot.

    ``p`` is odd, so the result is a ``Z/2`` homology sphere and this is also
    the ``SL_2(C)`` invariant.

    Args:
        spec (TwistSurgerySpec): A validated spec.

    Returns:
        QuarterRational: The invariant.
    """
    xi, p, q = spec.xi, spec.p, spec.q
    if xi % 2 == 0:
        quarters = (
            xi * abs(4 * q + p)
            + (xi - 2) * abs(p)
            + 2 * abs(2 * xi * q - p)
            - 2 * xi
        )
    else:
        quarters = (
            (xi - 1) * (abs(4 * q - p) + abs(p))
            + 2 * abs(2 * xi * q + 4 * q - p)
            - 2 * xi
        )
    return QuarterRational(quarters)


def lambda_psl_small_seifert(spec: SmallSeifertSpec) -> QuarterRational:
    """The ``PSL_2(C)`` Casson invariant of a small Seifert space.

    The value only depends on the cone orders ``(p, q, r)``.

    Args:
        spec (SmallSeifertSpec): A validated spec.

    Returns:
        QuarterRational: The invariant.
    """
    p, q, r = spec.orders
    corrections = (
        floor_half(math.gcd(p, q))
        + floor_half(math.gcd(p, r))
        + floor_half(math.gcd(q, r))
        - floor_half(math.gcd(p * q, p * r, q * r))
        - sigma_triple(p, q, r)
    )
    return QuarterRational((p - 1) * (q - 1) * (r - 1) + 4 * corrections)


def order_by_valuation(
    orders: tuple[int, int, int]
) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Sorts cone orders by descending 2-adic valuation, breaking ties by
    descending order.

    Args:
        orders (tuple[int, int, int]): The cone orders.

    Returns:
        tuple[tuple[int, int, int], tuple[int, int, int]]: The sorted orders
            and their valuations ``(alpha, beta, gamma)``.
    """
    ranked = sorted(
        orders,
        key=lambda n: (two_adic_split(n)[0], n),
        reverse=True,
    )
    p, q, r = ranked
    return (p, q, r), (
        two_adic_split(p)[0],
        two_adic_split(q)[0],
        two_adic_split(r)[0],
    )


def xi_coefficients(
    valuations: tuple[int, int, int],
    rule: Xi3Rule = Xi3Rule.LCM_PARITY,
) -> tuple[int, int, int]:
    """The weights ``xi_1``, ``xi_2`` and ``xi_3`` of the gcd terms in the
    ``SL_2(C)`` formula.

    Args:
        valuations (tuple[int, int, int]): The 2-adic valuations
            ``alpha >= beta >= gamma`` of the reordered cone orders.
        rule (Xi3Rule): Reading of ``xi_3``. Defaults to
            ``Xi3Rule.LCM_PARITY``.

    Returns:
        tuple[int, int, int]: Each weight is 1 or 2.
    """
    alpha, beta, gamma = valuations
    xi1 = 2 if beta > 0 else 1
    xi2 = 2 if gamma > 0 or alpha == beta > 0 else 1
    xi3_twice = alpha == beta > gamma
    if rule is Xi3Rule.PUBLISHED:
        xi3_twice = xi3_twice or alpha > beta == gamma
    return xi1, xi2, 2 if xi3_twice else 1


def lambda_sl_small_seifert(
    spec: SmallSeifertSpec,
    rule: Xi3Rule = Xi3Rule.LCM_PARITY,
) -> QuarterRational:
    """The ``SL_2(C)`` Casson invariant of a small Seifert space.

    The cone orders are first reordered so their 2-adic valuations satisfy
    ``alpha >= beta >= gamma``; the gcd terms use the reordered labels.

    Args:
        spec (SmallSeifertSpec): A validated spec.
        rule (Xi3Rule): Reading of the ``xi_3`` coefficient. Defaults to
            ``Xi3Rule.LCM_PARITY``.

    Raises:
        IntegralityError: If the value is not an integer.

    Returns:
        QuarterRational: The invariant, always an integer.
    """
    (p, q, r), valuations = order_by_valuation(spec.orders)
    xi1, xi2, xi3 = xi_coefficients(valuations, rule)
    quarters = (
        (p - 1) * (q - 1) * (r - 1)
        + sigma_pair(p, q) * (r - 1)
        + sigma_pair(p, r) * (q - 1)
        + sigma_pair(q, r) * (p - 1)
        + 4
        * (
            xi1 * floor_half(math.gcd(p, q))
            + xi2 * floor_half(math.gcd(p, r))
            + xi2 * floor_half(math.gcd(q, r))
            - xi3 * floor_half(math.gcd(p * q, p * r, q * r))
            - 4 * sigma_triple(p, q, r)
        )
    )
    value = QuarterRational(quarters)
    if not value.is_integer:
        raise IntegralityError(
            f"SL(2,C) invariant of {spec} is not an integer: {value}"
        )
    return value


def base_geometry(p: int, q: int, r: int) -> BaseGeometry:
    """Classifies the orbifold ``S^2(p, q, r)`` by the sign of its Euler
    characteristic ``1/p + 1/q + 1/r - 1``.
    """
    curvature = Fraction(1, p) + Fraction(1, q) + Fraction(1, r)
    if curvature > 1:
        return BaseGeometry.SPHERICAL
    if curvature == 1:
        return BaseGeometry.EUCLIDEAN
    return BaseGeometry.HYPERBOLIC


def theorem_case(spec: SmallSeifertSpec) -> TheoremCase:
    """Which parity case of the ``SL_2(C)`` formula a spec falls in.

    Args:
        spec (SmallSeifertSpec): A validated spec.

    Returns:
        TheoremCase: The case.
    """
    if spec.euler_numerator % 2 != 0:
        return TheoremCase.Z2_HOMOLOGY_SPHERE
    _, (_, beta, gamma) = order_by_valuation(spec.orders)
    if gamma > 0:
        return TheoremCase.CASE_3
    if beta > 0:
        return TheoremCase.CASE_2
    if all(c % 2 == 0 for c in spec.coefficients):
        return TheoremCase.CASE_1
    return TheoremCase.ODD_ORDERS


def sl_formula_proved(spec: SmallSeifertSpec) -> bool:
    """Whether the ``SL_2(C)`` formula is proved for this spec: all cone
    orders even, a ``Z/2`` homology sphere, or pairwise coprime cone orders.
    """
    return pairwise_coprime(spec.orders) or theorem_case(spec) in (
        TheoremCase.CASE_3,
        TheoremCase.Z2_HOMOLOGY_SPHERE,
    )


def small_seifert_presentation(spec: SmallSeifertSpec) -> IntMatrix:
    """Relation matrix of ``H_1`` on the generators ``x, y, h``.

    Writing ``z = (xy)^-1`` the relations ``x^p = h^a``, ``y^q = h^b`` and
    ``z^r = h^c`` abelianize to the rows ``(p, 0, -a)``, ``(0, q, -b)`` and
    ``(-r, -r, -c)``.

    Args:
        spec (SmallSeifertSpec): The spec.

    Returns:
        IntMatrix: The 3x3 relation matrix.
    """
    p, q, r = spec.orders
    a, b, c = spec.coefficients
    return IntMatrix.from_rows([[p, 0, -a], [0, q, -b], [-r, -r, -c]])


def triangle_presentation(p: int, q: int, r: int) -> IntMatrix:
    """Relation matrix of ``H_1`` of the triangle group on ``x, y``."""
    return IntMatrix.from_rows([[p, 0], [0, q], [r, r]])


def h1_small_seifert(spec: SmallSeifertSpec) -> AbelianGroup:
    """``H_1 = Z/m1 + Z/m2`` with ``m1 = gcd(p, q, r)`` and
    ``m2 = |aqr + bpr + cpq| / m1``.

    Args:
        spec (SmallSeifertSpec): A validated spec.

    Raises:
        IntegralityError: If ``m1`` does not divide ``m2``.

    Returns:
        AbelianGroup: The first homology group.
    """
    m1 = math.gcd(*spec.orders)
    m2 = abs(spec.euler_numerator) // m1
    if m2 % m1 != 0:
        raise IntegralityError(f"gcd {m1} does not divide {m2} for {spec}")
    return AbelianGroup(tuple(d for d in (m1, m2) if d > 1))


def h1_twist_surgery(spec: TwistSurgerySpec) -> AbelianGroup:
    """``H_1`` of ``p/q`` surgery on a knot is ``Z/|p|``."""
    return AbelianGroup.cyclic(abs(spec.p))
