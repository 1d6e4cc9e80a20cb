from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from casson_invariants.arithmetic import QuarterRational, floor_half
from casson_invariants.manifolds import SmallSeifertSpec

logger = logging.getLogger(__name__)


def sigma_pair(m: int, n: int) -> int:
    """1 if ``m`` and ``n`` are both even, 0 otherwise."""
    return int(m % 2 == 0 and n % 2 == 0)


def sigma_triple(p: int, q: int, r: int) -> int:
    """1 if ``p``, ``q`` and ``r`` are all even, 0 otherwise."""
    return int(p % 2 == 0 and q % 2 == 0 and r % 2 == 0)


@dataclass(frozen=True)
class CharacterCensus:
    """Counts of ``PSL_2(C)`` characters of a small Seifert space.

    ``dihedral`` counts characters whose image is dihedral of order at least
    4, Klein four-group characters included; ``klein`` counts those alone.
    Reducible characters weigh 0, dihedral ones 1/2, Klein four-group ones
    1/4 and all others 1.
    """

    reducible: int
    dihedral: int
    klein: int
    total: int

    @property
    def lambda_psl_from_census(self) -> QuarterRational:
        """``total - reducible - dihedral/2 - klein/4``, exactly."""
        return QuarterRational(
            4 * self.total
            - 4 * self.reducible
            - 2 * self.dihedral
            - self.klein
        )

    def as_dict(self) -> dict[str, int]:
        return {
            "reducible": self.reducible,
            "dihedral": self.dihedral,
            "klein": self.klein,
            "total": self.total,
        }


def bb_census(spec: SmallSeifertSpec) -> CharacterCensus:
    """Counts the reducible, dihedral, Klein four-group and total
    ``PSL_2(C)`` characters of a small Seifert space in closed form.

    Args:
        spec (SmallSeifertSpec): A validated spec.

    Returns:
        CharacterCensus: The four counts.
    """
    p, q, r = spec.orders
    euler = abs(spec.euler_numerator)
    all_even = sigma_triple(p, q, r)

    reducible = floor_half(euler) + (2 if math.gcd(p, q, r) % 2 == 0 else 1)
    dihedral = (
        sigma_pair(q, r) * floor_half(p)
        + sigma_pair(p, r) * floor_half(q)
        + sigma_pair(p, q) * floor_half(r)
        - 2 * all_even
    )
    total = (
        floor_half(p) * floor_half(q) * floor_half(r)
        + floor_half(p - 1) * floor_half(q - 1) * floor_half(r - 1)
        + floor_half(euler)
        - floor_half(math.gcd(p * q, p * r, q * r))
        + floor_half(math.gcd(p, q))
        + floor_half(math.gcd(p, r))
        + floor_half(math.gcd(q, r))
        + 1
    )
    census = CharacterCensus(
        reducible=reducible, dihedral=dihedral, klein=all_even, total=total
    )
    logger.debug("Census of %r: %r", spec, census)
    return census
