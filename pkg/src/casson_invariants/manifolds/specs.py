from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterator, Union


@dataclass(frozen=True)
class SeifertHSSpec:
    """The Seifert fibered homology sphere with the given multiplicities.

    Fewer than three multiplicities is allowed; such manifolds have cyclic
    fundamental group and every invariant vanishes on them.
    """

    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "multiplicities", tuple(self.multiplicities))


@dataclass(frozen=True)
class SmallSeifertSpec:
    """A Seifert fibered space over the orbifold ``S^2(p, q, r)``.

    The fundamental group is ``<x, y, h | h central, x^p = h^a, y^q = h^b,
    (xy)^r = h^c>``. Each cone order travels together with its Seifert
    coefficient, so ``(p, a)``, ``(q, b)`` and ``(r, c)`` are the exceptional
    fibers.
    """

    p: int
    q: int
    r: int
    a: int
    b: int
    c: int

    @staticmethod
    def from_fibers(fibers: tuple[tuple[int, int], ...]) -> SmallSeifertSpec:
        """Builds a spec from three ``(order, coefficient)`` fibers.

        Args:
            fibers (tuple[tuple[int, int], ...]): The three exceptional
                fibers in order.

        Raises:
            ValueError: If there are not exactly three fibers.

        Returns:
            SmallSeifertSpec: The spec.
        """
        if len(fibers) != 3:
            raise ValueError(f"expected three fibers, got {len(fibers)}")
        (p, a), (q, b), (r, c) = fibers
        return SmallSeifertSpec(p, q, r, a, b, c)

    @property
    def orders(self) -> tuple[int, int, int]:
        return self.p, self.q, self.r

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    @property
    def fibers(self) -> tuple[tuple[int, int], ...]:
        return (self.p, self.a), (self.q, self.b), (self.r, self.c)

    @property
    def euler_numerator(self) -> int:
        """``a*q*r + b*p*r + c*p*q``, up to sign the order of ``H_1``."""
        return (
            self.a * self.q * self.r
            + self.b * self.p * self.r
            + self.c * self.p * self.q
        )

    def mirror(self) -> SmallSeifertSpec:
        """The same manifold with the opposite orientation."""
        return SmallSeifertSpec(
            self.p, self.q, self.r, -self.a, -self.b, -self.c
        )


@dataclass(frozen=True)
class TwistSurgerySpec:
    """``p/q`` Dehn surgery on the twist knot with ``xi`` half twists.

    Use ``from_slope`` to build a normalized spec: the slope is stored with
    ``p > 0`` and the slope as written is kept in ``original_slope`` for
    display only.
    """

    xi: int
    p: int
    q: int
    original_slope: tuple[int, int] | None = field(
        default=None, compare=False
    )

    @staticmethod
    def from_slope(xi: int, p: int, q: int) -> TwistSurgerySpec:
        """Builds a spec with the sign of the slope moved onto ``q``.

        Args:
            xi (int): Number of half twists.
            p (int): Numerator of the slope.
            q (int): Denominator of the slope.

        Returns:
            TwistSurgerySpec: The normalized spec.
        """
        if p < 0:
            return TwistSurgerySpec(xi, -p, -q, original_slope=(p, q))
        return TwistSurgerySpec(xi, p, q, original_slope=(p, q))

    @property
    def slope(self) -> tuple[int, int]:
        if self.original_slope is not None:
            return self.original_slope
        return self.p, self.q


@dataclass(frozen=True)
class ConnectedSum:
    """The connected sum of two manifold expressions."""

    left: ManifoldExpr
    right: ManifoldExpr


ManifoldLeaf = Union[SeifertHSSpec, SmallSeifertSpec, TwistSurgerySpec]
ManifoldExpr = Union[ManifoldLeaf, ConnectedSum]
LEAF_TYPES = (SeifertHSSpec, SmallSeifertSpec, TwistSurgerySpec)


def connected_sum(*parts: ManifoldExpr) -> ManifoldExpr:
    """Folds the parts into a left-associated connected sum.

    Args:
        *parts (ManifoldExpr): At least one summand.

    Raises:
        ValueError: If no parts are given.

    Returns:
        ManifoldExpr: The left-associated sum, or the single part.
    """
    if not parts:
        raise ValueError("a connected sum needs at least one summand")
    return functools.reduce(ConnectedSum, parts)


def leaves(expr: ManifoldExpr) -> Iterator[ManifoldLeaf]:
    """Yields the leaves of an expression from left to right."""
    if isinstance(expr, ConnectedSum):
        yield from leaves(expr.left)
        yield from leaves(expr.right)
    else:
        yield expr
