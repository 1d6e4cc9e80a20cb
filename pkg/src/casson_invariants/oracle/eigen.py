"""Eigenvalue classes of generators of triangle-group quotients.

An eigenvalue class of modulus ``N`` and exponent ``t`` is the pair
``{zeta, 1/zeta}`` with ``zeta = exp(pi * i * t / N)``, so ``zeta ** N`` is
``+1`` for even ``t`` and ``-1`` for odd ``t``. Canonical classes satisfy
``0 < t < N``: inversion sends ``t`` to ``2N - t`` and ``zeta = +-1`` is
excluded since a generator sent to ``+-I`` only has reducible characters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from casson_invariants.manifolds import SmallSeifertSpec


@dataclass(frozen=True)
class SectorSpec:
    """Required values of ``rho(x)^p``, ``rho(y)^q`` and ``rho(xy)^r`` for
    the sector where the central element acts as ``central_sign * I``.
    """

    central_sign: int
    sign_x: int
    sign_y: int
    sign_xy: int

    def __post_init__(self) -> None:
        signs = (self.central_sign, self.sign_x, self.sign_y, self.sign_xy)
        if any(sign not in (1, -1) for sign in signs):
            raise ValueError(f"sector signs must be +1 or -1, got {signs}")
        if self.central_sign == 1 and signs != (1, 1, 1, 1):
            raise ValueError("the +I sector needs all signs equal to +1")

    @staticmethod
    def for_spec(spec: SmallSeifertSpec, central_sign: int) -> SectorSpec:
        """The sector of ``spec`` with ``rho(h) = central_sign * I``.

        Args:
            spec (SmallSeifertSpec): The small Seifert space.
            central_sign (int): ``+1`` or ``-1``.

        Returns:
            SectorSpec: ``(+1, +1, +1, +1)`` for the ``+I`` sector, and
                ``(-1, (-1)^a, (-1)^b, (-1)^c)`` for the ``-I`` sector.
        """
        if central_sign == 1:
            return SectorSpec(1, 1, 1, 1)
        a, b, c = spec.coefficients
        return SectorSpec(central_sign, *((-1) ** (n % 2) for n in (a, b, c)))


@dataclass(frozen=True, order=True)
class EigenClass:
    modulus: int
    exponent: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 < self.exponent < self.modulus:
            raise ValueError(
                f"exponent {self.exponent} is not canonical for modulus "
                f"{self.modulus}"
            )

    def rescaled(self, period: int) -> int:
        """The exponent of ``zeta`` as a power of ``exp(2 pi i / period)``.

        Args:
            period (int): A multiple of ``2 * modulus``.

        Returns:
            int: The rescaled exponent.
        """
        return self.exponent * (period // (2 * self.modulus))


def sector_eigen_classes(order: int, sign: int) -> list[EigenClass]:
    """All canonical eigenvalue classes ``zeta`` with ``zeta ** order`` equal
    to ``sign``.

    Args:
        order (int): The order ``n >= 2`` of the generator.
        sign (int): ``+1`` or ``-1``.

    Raises:
        ValueError: If ``order < 2`` or ``sign`` is not ``+-1``.

    Returns:
        list[EigenClass]: Even exponents for ``+1``, odd exponents for
            ``-1``, increasing.
    """
    if order < 2:
        raise ValueError(f"order must be at least 2, got {order}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    first = 2 if sign == 1 else 1
    return [EigenClass(order, t) for t in range(first, order, 2)]


def canonical_residue(exponent: int, period: int) -> int:
    """Representative of ``{exponent, -exponent}`` modulo ``period`` in
    ``[0, period / 2]``.
    """
    residue = exponent % period
    return min(residue, period - residue)


def reducible_residues(x: EigenClass, y: EigenClass, period: int) -> set[int]:
    """Canonical residues of the ``xy`` eigenvalues of diagonal
    representations with the given ``x`` and ``y`` eigenvalues.
    """
    tx, ty = x.rescaled(period), y.rescaled(period)
    return {
        canonical_residue(tx + ty, period),
        canonical_residue(tx - ty, period),
    }


def is_reducible_triple(x: EigenClass, y: EigenClass, z: EigenClass) -> bool:
    """Whether the eigenvalue classes of ``x``, ``y`` and ``xy`` are those of
    a diagonal representation.

    With ``L = 2 * lcm`` of the three moduli and exponents rescaled to
    ``L``, this holds iff ``t_z = +-(t_x + t_y)`` or ``t_z = +-(t_x - t_y)``
    modulo ``L``.

    Args:
        x (EigenClass): Class of ``rho(x)``.
        y (EigenClass): Class of ``rho(y)``.
        z (EigenClass): Class of ``rho(xy)``.

    Returns:
        bool: True if the triple is reducible.
    """
    period = 2 * math.lcm(x.modulus, y.modulus, z.modulus)
    return canonical_residue(z.rescaled(period), period) in reducible_residues(
        x, y, period
    )
