from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as _sympy_snf

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    """A rectangular integer matrix used as a presentation matrix: the rows
    are relations among the generators indexed by the columns.
    """

    entries: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> IntMatrix:
        """Builds a matrix from its rows.

        Args:
            rows (Iterable[Iterable[int]]): The rows, all of the same length.

        Raises:
            ValueError: If there are no rows, no columns, ragged rows or
                non-integer entries.

        Returns:
            IntMatrix: The matrix.
        """
        entries = tuple(tuple(row) for row in rows)
        if not entries or not entries[0]:
            raise ValueError("a presentation matrix needs at least one entry")
        width = len(entries[0])
        for row in entries:
            if len(row) != width:
                raise ValueError("presentation matrix rows differ in length")
            for value in row:
                if isinstance(value, bool) or not isinstance(value, int):
                    raise ValueError(
                        f"presentation matrix entry {value!r} is not an int"
                    )
        return IntMatrix(entries)

    @staticmethod
    def diagonal(values: Sequence[int]) -> IntMatrix:
        """Builds the square diagonal matrix with the given diagonal.

        Args:
            values (Sequence[int]): The diagonal entries.

        Returns:
            IntMatrix: The diagonal matrix.
        """
        size = len(values)
        return IntMatrix.from_rows(
            [values[i] if i == j else 0 for j in range(size)]
            for i in range(size)
        )

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    def to_sympy(self) -> Matrix:
        return Matrix([list(row) for row in self.entries])


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group in canonical form.

    ``invariant_factors`` is the sequence ``d_1 | d_2 | ... | d_k`` of
    invariant factors greater than one, followed by one ``0`` per free
    ``Z`` summand. The trivial group has no factors.
    """

    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        torsion = [d for d in self.invariant_factors if d != 0]
        tail = self.invariant_factors[len(torsion) :]
        if any(d != 0 for d in tail):
            raise ValueError("free summands must follow the torsion factors")
        if any(d < 2 for d in torsion):
            raise ValueError(
                "invariant factors must be at least 2, got "
                f"{self.invariant_factors}"
            )
        for small, large in zip(torsion, torsion[1:]):
            if large % small != 0:
                raise ValueError(
                    f"invariant factors {self.invariant_factors} do not form "
                    "a divisibility chain"
                )

    @staticmethod
    def trivial() -> AbelianGroup:
        return AbelianGroup(())

    @staticmethod
    def cyclic(order: int) -> AbelianGroup:
        """The cyclic group ``Z/order``, or ``Z`` when ``order`` is zero.

        Args:
            order (int): The order of the group.

        Returns:
            AbelianGroup: The cyclic group.
        """
        return smith_normal_form(IntMatrix.from_rows([[order]]))

    @property
    def is_finite(self) -> bool:
        return 0 not in self.invariant_factors

    @property
    def rank(self) -> int:
        return self.invariant_factors.count(0)

    @property
    def order(self) -> int:
        """The order of the group.

        Raises:
            ValueError: If the group is infinite.

        Returns:
            int: The product of the invariant factors.
        """
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return math.prod(self.invariant_factors)

    def direct_sum(self, other: AbelianGroup) -> AbelianGroup:
        """The direct sum of two groups, brought back to canonical form.

        Args:
            other (AbelianGroup): The other summand.

        Returns:
            AbelianGroup: The canonical direct sum.
        """
        factors = self.invariant_factors + other.invariant_factors
        if not factors:
            return AbelianGroup.trivial()
        return smith_normal_form(IntMatrix.diagonal(factors))

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return "+".join(
            "Z" if d == 0 else f"Z/{d}" for d in self.invariant_factors
        )


def smith_normal_form(matrix: IntMatrix) -> AbelianGroup:
    """Computes the cokernel of a presentation matrix, i.e. the abelian group
    generated by the columns subject to the row relations.

    Args:
        matrix (IntMatrix): The presentation matrix.

    Returns:
        AbelianGroup: The presented group in canonical form.
    """
    rows, cols = matrix.shape
    normal = _sympy_snf(matrix.to_sympy(), domain=ZZ)
    diagonal = [abs(int(normal[i, i])) for i in range(min(rows, cols))]
    # Generators without a relation row are free
    diagonal.extend([0] * (cols - len(diagonal)))
    torsion = _divisibility_chain([d for d in diagonal if d > 1])
    free = [0] * diagonal.count(0)
    logger.debug("Smith normal form of %s: %s", matrix.entries, diagonal)
    return AbelianGroup(tuple(torsion) + tuple(free))


def two_torsion_order(group: AbelianGroup) -> int:
    """Order of the 2-torsion ``Hom(G, Z/2)`` of a finite abelian group.

    Args:
        group (AbelianGroup): A finite abelian group.

    Raises:
        ValueError: If the group is infinite.

    Returns:
        int: ``2`` raised to the number of even invariant factors.
    """
    if not group.is_finite:
        raise ValueError(f"two-torsion of the infinite group {group}")
    return 2 ** sum(1 for d in group.invariant_factors if d % 2 == 0)


def _divisibility_chain(values: list[int]) -> list[int]:
    # gcd/lcm exchange keeps the product and yields d_1 | d_2 | ...
    chain = sorted(values)
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            g = math.gcd(chain[i], chain[j])
            chain[i], chain[j] = g, chain[i] * chain[j] // g
    return [d for d in chain if d > 1]
