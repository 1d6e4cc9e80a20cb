from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator

from casson_invariants.exceptions import ManifoldValidationError
from casson_invariants.invariants import decompose_lambda_zero
from casson_invariants.manifolds import SmallSeifertSpec, validate
from casson_invariants.oracle import VerificationReport, verify_census
from casson_invariants.cli.emit import SweepRow

logger = logging.getLogger(__name__)


def valid_coefficients(
    p: int, q: int, r: int, bound: int | None = None
) -> Iterator[tuple[int, int, int]]:
    """Yields the valid positive coefficient triples ``(a, b, c)`` for the
    cone orders ``(p, q, r)`` in lexicographic order.

    Args:
        p (int): First cone order.
        q (int): Second cone order.
        r (int): Third cone order.
        bound (int | None): Largest coefficient tried. Defaults to
            ``2 * max(p, q, r)``.

    Yields:
        tuple[int, int, int]: The valid triples.
    """
    bound = bound or 2 * max(p, q, r)
    for a, b, c in itertools.product(range(1, bound + 1), repeat=3):
        try:
            validate(SmallSeifertSpec(p, q, r, a, b, c))
        except ManifoldValidationError:
            continue
        yield a, b, c


def default_spec(orders: tuple[int, int, int]) -> SmallSeifertSpec:
    """The small Seifert space with the given cone orders and the
    lexicographically smallest valid positive coefficients.

    Args:
        orders (tuple[int, int, int]): The cone orders.

    Raises:
        ManifoldValidationError: If no coefficients make the orders valid.

    Returns:
        SmallSeifertSpec: The spec.
    """
    p, q, r = orders
    for a, b, c in valid_coefficients(p, q, r):
        return SmallSeifertSpec(p, q, r, a, b, c)
    # Every coefficient is rejected only when an order is below 2
    return validate(SmallSeifertSpec(p, q, r, 1, 1, 1))


def sweep_specs(
    max_order: int, samples: int, min_order: int = 2
) -> Iterator[SmallSeifertSpec]:
    """Yields the specs of a sweep: every ``min_order <= p <= q <= r <=
    max_order`` with its first ``samples`` valid coefficient triples.

    Args:
        max_order (int): Largest cone order.
        samples (int): Coefficient triples per cone-order triple.
        min_order (int): Smallest cone order. Defaults to 2.

    Yields:
        SmallSeifertSpec: The specs in lexicographic order.
    """
    for p, q, r in itertools.combinations_with_replacement(
        range(min_order, max_order + 1), 3
    ):
        for a, b, c in itertools.islice(valid_coefficients(p, q, r), samples):
            yield SmallSeifertSpec(p, q, r, a, b, c)


@dataclass
class SweepOutcome:
    rows: list[SweepRow] = field(default_factory=list)
    reports: list[VerificationReport] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(len(report.failures) for report in self.reports)

    @property
    def findings(self) -> int:
        return sum(len(report.findings) for report in self.reports)

    @property
    def passed(self) -> bool:
        return self.failures == 0


def run_sweep(max_order: int, samples: int, cap: int) -> SweepOutcome:
    """Computes and verifies every spec of a sweep.

    Args:
        max_order (int): Largest cone order.
        samples (int): Coefficient triples per cone-order triple.
        cap (int): Enumeration cap for the oracle.

    Returns:
        SweepOutcome: The rows in emission order and their verifications.
    """
    outcome = SweepOutcome()
    for spec in sweep_specs(max_order, samples):
        logger.info("Sweeping %s", spec)
        verification = verify_census(spec, cap)
        outcome.reports.append(verification)
        outcome.rows.append(
            SweepRow.from_report(decompose_lambda_zero(spec), verification)
        )
    logger.info(
        "Sweep up to %d: %d rows, %d failed checks, %d findings",
        max_order,
        len(outcome.rows),
        outcome.failures,
        outcome.findings,
    )
    return outcome
