from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from typing import Any

from casson_invariants.arithmetic import (
    pairwise_coprime,
    smith_normal_form,
)
from casson_invariants.constants import DEFAULT_ENUMERATION_CAP
from casson_invariants.exceptions import EnumerationCapExceeded
from casson_invariants.invariants import (
    BaseGeometry,
    TheoremCase,
    Xi3Rule,
    base_geometry,
    bb_census,
    h1_small_seifert,
    lambda_psl_seifert_hs,
    lambda_psl_small_seifert,
    lambda_sl_small_seifert,
    sl_formula_proved,
    small_seifert_presentation,
    theorem_case,
)
from casson_invariants.manifolds import SeifertHSSpec, SmallSeifertSpec, render
from casson_invariants.oracle.counting import (
    check_cap,
    count_diagonal_characters,
    count_sl_irreducible,
    count_triangle_reducible,
)

logger = logging.getLogger(__name__)


class CheckStatus(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    FINDING = "finding"
    SKIPPED = "skipped"
    NOT_APPLICABLE = "not-applicable"


class CHECKS:
    ORACLE_LAMBDA_SL = "oracle-lambda-sl"
    PUBLISHED_XI3 = "published-xi3"
    TRIANGLE_CLOSED_FORM = "triangle-reducible-closed-form"
    TRIANGLE_BRUTE_FORCE = "triangle-reducible-brute-force"
    H1_SNF = "h1-snf"
    COMPOSITION = "composition-identity"
    Z2_AGREEMENT = "z2-homology-sphere-agreement"
    COPRIME_REDUCTION = "coprime-reduction"
    NON_NEGATIVITY = "non-negativity"
    INTEGRALITY = "sl-integrality"


@dataclass(frozen=True)
class Check:
    name: str
    status: CheckStatus
    expected: Any = None
    actual: Any = None
    detail: str = ""

    def __str__(self) -> str:
        text = f"{self.name}: {self.status.value}"
        if self.status in (
            CheckStatus.PASS,
            CheckStatus.FAIL,
            CheckStatus.FINDING,
        ):
            text += f" (expected {self.expected}, got {self.actual})"
        if self.detail:
            text += f" [{self.detail}]"
        return text


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of every cross-check run on one small Seifert space."""

    manifold: str
    theorem_case: TheoremCase
    geometry: BaseGeometry
    oracle_counts: tuple[int, int] | None
    checks: tuple[Check, ...]

    def statuses(self, status: CheckStatus) -> list[Check]:
        return [check for check in self.checks if check.status is status]

    @property
    def failures(self) -> list[Check]:
        return self.statuses(CheckStatus.FAIL)

    @property
    def findings(self) -> list[Check]:
        return self.statuses(CheckStatus.FINDING)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, name: str) -> Check:
        """The check with the given name.

        Args:
            name (str): One of the names in ``CHECKS``.

        Raises:
            KeyError: If the report has no such check.

        Returns:
            Check: The check.
        """
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    @property
    def oracle_status(self) -> CheckStatus:
        return self.check(CHECKS.ORACLE_LAMBDA_SL).status


def _compare(
    name: str,
    expected: Any,
    actual: Any,
    strict: bool = True,
    detail: str = "",
) -> Check:
    if expected == actual:
        status = CheckStatus.PASS
    else:
        status = CheckStatus.FAIL if strict else CheckStatus.FINDING
    return Check(name, status, expected, actual, detail)


def verify_census(
    spec: SmallSeifertSpec, cap: int = DEFAULT_ENUMERATION_CAP
) -> VerificationReport:
    """Cross-checks the closed forms of a small Seifert space against
    enumeration, Smith normal forms and each other.

    A disagreement between enumeration and the ``SL_2(C)`` formula fails
    only where the formula is proved and the base orbifold is hyperbolic;
    elsewhere it is a finding. Checks whose enumeration would exceed
    ``cap`` are skipped. Discrepancies never raise.

    Args:
        spec (SmallSeifertSpec): A validated spec.
        cap (int): Largest allowed enumeration size. Defaults to
            ``DEFAULT_ENUMERATION_CAP``.

    Returns:
        VerificationReport: The report.
    """
    p, q, r = spec.orders
    case = theorem_case(spec)
    geometry = base_geometry(p, q, r)
    lambda_psl = lambda_psl_small_seifert(spec)
    lambda_sl = lambda_sl_small_seifert(spec)
    checks: list[Check] = []

    try:
        plus, minus = count_sl_irreducible(spec, cap)
        oracle_counts: tuple[int, int] | None = (plus, minus)
    except EnumerationCapExceeded as exc:
        logger.info("Skipping enumeration of %s: %s", render(spec), exc)
        oracle_counts = None

    strict = sl_formula_proved(spec) and geometry is BaseGeometry.HYPERBOLIC
    if oracle_counts is None:
        checks.append(Check(CHECKS.ORACLE_LAMBDA_SL, CheckStatus.SKIPPED))
        checks.append(Check(CHECKS.PUBLISHED_XI3, CheckStatus.SKIPPED))
    else:
        enumerated = sum(oracle_counts)
        bucket = case.value
        if geometry is not BaseGeometry.HYPERBOLIC:
            bucket += f", {geometry.value} base"
        checks.append(
            _compare(
                CHECKS.ORACLE_LAMBDA_SL,
                lambda_sl,
                enumerated,
                strict=strict,
                detail=bucket,
            )
        )
        published = lambda_sl_small_seifert(spec, Xi3Rule.PUBLISHED)
        if published == lambda_sl:
            checks.append(
                Check(CHECKS.PUBLISHED_XI3, CheckStatus.NOT_APPLICABLE)
            )
        else:
            checks.append(
                _compare(
                    CHECKS.PUBLISHED_XI3, published, enumerated, strict=False
                )
            )

    triangle = count_triangle_reducible(p, q, r)
    gcd_pairs = math.gcd(p * q, p * r, q * r)
    if math.gcd(p, q, r) % 2 == 0:
        checks.append(
            _compare(CHECKS.TRIANGLE_CLOSED_FORM, 2 + gcd_pairs // 2, triangle)
        )
    else:
        checks.append(
            Check(CHECKS.TRIANGLE_CLOSED_FORM, CheckStatus.NOT_APPLICABLE)
        )
    try:
        check_cap(p * q, cap)
        checks.append(
            _compare(
                CHECKS.TRIANGLE_BRUTE_FORCE,
                count_diagonal_characters(p, q, r),
                triangle,
            )
        )
    except EnumerationCapExceeded:
        checks.append(Check(CHECKS.TRIANGLE_BRUTE_FORCE, CheckStatus.SKIPPED))

    checks.append(
        _compare(
            CHECKS.H1_SNF,
            smith_normal_form(small_seifert_presentation(spec)),
            h1_small_seifert(spec),
        )
    )
    checks.append(
        _compare(
            CHECKS.COMPOSITION,
            lambda_psl,
            bb_census(spec).lambda_psl_from_census,
        )
    )
    if case is TheoremCase.Z2_HOMOLOGY_SPHERE:
        checks.append(_compare(CHECKS.Z2_AGREEMENT, lambda_psl, lambda_sl))
    else:
        checks.append(Check(CHECKS.Z2_AGREEMENT, CheckStatus.NOT_APPLICABLE))
    if pairwise_coprime(spec.orders):
        seifert_hs = lambda_psl_seifert_hs(SeifertHSSpec((p, q, r)))
        checks.append(
            _compare(
                CHECKS.COPRIME_REDUCTION,
                (seifert_hs, seifert_hs),
                (lambda_psl, lambda_sl),
            )
        )
    else:
        checks.append(
            Check(CHECKS.COPRIME_REDUCTION, CheckStatus.NOT_APPLICABLE)
        )
    checks.append(
        _compare(
            CHECKS.NON_NEGATIVITY,
            True,
            lambda_psl >= 0 and lambda_sl >= 0,
        )
    )
    checks.append(_compare(CHECKS.INTEGRALITY, True, lambda_sl.is_integer))

    report = VerificationReport(
        manifold=render(spec),
        theorem_case=case,
        geometry=geometry,
        oracle_counts=oracle_counts,
        checks=tuple(checks),
    )
    for check in report.findings:
        logger.warning("Finding for %s: %s", report.manifold, check)
    for check in report.failures:
        logger.error("Check failed for %s: %s", report.manifold, check)
    return report
