import math
from typing import Iterable


def floor_half(n: int) -> int:
    """Greatest integer not exceeding ``n / 2``.

    Args:
        n (int): A nonnegative integer.

    Raises:
        ValueError: If ``n`` is negative.

    Returns:
        int: ``n // 2``.
    """
    if n < 0:
        raise ValueError(f"floor_half expects a nonnegative integer, got {n}")
    return n // 2


def two_adic_split(n: int) -> tuple[int, int]:
    """Splits a positive integer into its power of two and its odd part, so
    that ``n == 2**valuation * odd_part``.

    Args:
        n (int): A positive integer.

    Raises:
        ValueError: If ``n`` is not positive.

    Returns:
        tuple[int, int]: The 2-adic valuation and the odd part of ``n``.
    """
    if n <= 0:
        raise ValueError(f"two_adic_split expects a positive integer, got {n}")
    # Lowest set bit gives the power of two dividing n
    valuation = (n & -n).bit_length() - 1
    return valuation, n >> valuation


def gcd_all(values: Iterable[int]) -> int:
    """Greatest common divisor of the absolute values of ``values``.

    Args:
        values (Iterable[int]): The integers, at least one of them nonzero.

    Raises:
        ValueError: If ``values`` is empty or every value is zero.

    Returns:
        int: The greatest common divisor, always positive.
    """
    values = list(values)
    if not values or all(v == 0 for v in values):
        raise ValueError("gcd_all needs at least one nonzero value")
    return math.gcd(*values)


def lcm_all(values: Iterable[int]) -> int:
    """Least common multiple of the absolute values of ``values``.

    Args:
        values (Iterable[int]): Nonzero integers.

    Raises:
        ValueError: If ``values`` is empty or contains a zero.

    Returns:
        int: The least common multiple, always positive.
    """
    values = list(values)
    if not values or any(v == 0 for v in values):
        raise ValueError("lcm_all needs a nonempty list of nonzero values")
    return math.lcm(*values)


def pairwise_coprime(values: Iterable[int]) -> bool:
    """Whether every two of the values are coprime.

    Args:
        values (Iterable[int]): The integers.

    Returns:
        bool: True if ``gcd(m, n) == 1`` for every pair of distinct
            positions. Fewer than two values are trivially coprime.
    """
    values = list(values)
    return all(
        math.gcd(values[i], values[j]) == 1
        for i in range(len(values))
        for j in range(i + 1, len(values))
    )
