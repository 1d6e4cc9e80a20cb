from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import SupportsIndex


@functools.total_ordering
@dataclass(frozen=True)
class QuarterRational:
    """An exact element of ``(1/4)Z``.

    All invariants computed by this package are sums of the orbifold weights
    1, 1/2 and 1/4, so they are stored as the single integer ``quarters``
    with value ``quarters / 4``. Python integers have arbitrary precision, so
    there is no overflow to detect and no rounding ever happens.
    """

    quarters: int

    def __post_init__(self) -> None:
        if isinstance(self.quarters, bool) or not isinstance(
            self.quarters, int
        ):
            raise TypeError(
                "QuarterRational expects an integer number of quarters, got "
                f"{type(self.quarters).__name__}"
            )

    @classmethod
    def from_int(cls, value: int) -> QuarterRational:
        """Creates the quarter rational equal to an integer.

        Args:
            value (int): The integer.

        Returns:
            QuarterRational: ``value`` as a quarter rational.
        """
        return cls(4 * value)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> QuarterRational:
        """Creates a quarter rational from an exact fraction.

        Args:
            value (Fraction | int): The fraction. Its denominator must divide
                4.

        Raises:
            ValueError: If the fraction does not lie in ``(1/4)Z``.

        Returns:
            QuarterRational: The exact quarter rational.
        """
        value = Fraction(value)
        scaled = value * 4
        if scaled.denominator != 1:
            raise ValueError(f"{value} is not an integer multiple of 1/4")
        return cls(scaled.numerator)

    @classmethod
    def parse(cls, text: str) -> QuarterRational:
        """Parses the rendering produced by ``str``, e.g. ``"101/4"``.

        Args:
            text (str): The rendered value.

        Returns:
            QuarterRational: The parsed value.
        """
        return cls.from_fraction(Fraction(text.strip()))

    def as_fraction(self) -> Fraction:
        """The value as a reduced ``Fraction``.

        Returns:
            Fraction: ``quarters / 4``, reduced.
        """
        return Fraction(self.quarters, 4)

    @property
    def is_integer(self) -> bool:
        return self.quarters % 4 == 0

    def try_divide(self, divisor: int) -> QuarterRational | None:
        """Divides by a positive integer when the quotient stays in
        ``(1/4)Z``.

        Args:
            divisor (int): A positive integer.

        Raises:
            ValueError: If ``divisor`` is not positive.

        Returns:
            QuarterRational | None: The exact quotient, or None when it is
                not a multiple of 1/4.
        """
        if divisor <= 0:
            raise ValueError(f"divisor must be positive, got {divisor}")
        if self.quarters % divisor != 0:
            return None
        return QuarterRational(self.quarters // divisor)

    def __add__(self, other: object) -> QuarterRational:
        if isinstance(other, QuarterRational):
            return QuarterRational(self.quarters + other.quarters)
        if isinstance(other, int):
            return QuarterRational(self.quarters + 4 * other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: object) -> QuarterRational:
        if isinstance(other, QuarterRational):
            return QuarterRational(self.quarters - other.quarters)
        if isinstance(other, int):
            return QuarterRational(self.quarters - 4 * other)
        return NotImplemented

    def __rsub__(self, other: object) -> QuarterRational:
        if isinstance(other, int):
            return QuarterRational(4 * other - self.quarters)
        return NotImplemented

    def __neg__(self) -> QuarterRational:
        return QuarterRational(-self.quarters)

    def __mul__(self, other: SupportsIndex) -> QuarterRational:
        if isinstance(other, (QuarterRational, bool)):
            return NotImplemented
        try:
            factor = other.__index__()
        except AttributeError:
            return NotImplemented
        return QuarterRational(self.quarters * factor)

    __rmul__ = __mul__

    def __lt__(self, other: object) -> bool:
        if isinstance(other, QuarterRational):
            return self.quarters < other.quarters
        if isinstance(other, int):
            return self.quarters < 4 * other
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuarterRational):
            return self.quarters == other.quarters
        if isinstance(other, int) and not isinstance(other, bool):
            return self.quarters == 4 * other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __str__(self) -> str:
        return str(self.as_fraction())

    def __repr__(self) -> str:
        return f"QuarterRational({self})"


ZERO = QuarterRational(0)
