import pytest
from hypothesis import given
from hypothesis import strategies as st

from casson_invariants.arithmetic import (
    floor_half,
    gcd_all,
    lcm_all,
    pairwise_coprime,
    two_adic_split,
)


class TestIntegers:
    @pytest.mark.parametrize(
        "n, expected",
        [(0, 0), (7, 3), (8, 4)],
        ids=["zero", "odd", "even"],
    )
    def test_floor_half(self, n: int, expected: int) -> None:
        assert floor_half(n) == expected

    def test_floor_half_negative(self) -> None:
        with pytest.raises(ValueError):
            floor_half(-1)

    @pytest.mark.parametrize(
        "n, expected",
        [(8, (3, 1)), (6, (1, 3)), (7, (0, 7)), (1, (0, 1))],
        ids=["power of two", "mixed", "odd", "one"],
    )
    def test_two_adic_split(self, n: int, expected: tuple[int, int]) -> None:
        assert two_adic_split(n) == expected

    @pytest.mark.parametrize("n", [0, -4], ids=["zero", "negative"])
    def test_two_adic_split_invalid(self, n: int) -> None:
        with pytest.raises(ValueError):
            two_adic_split(n)

    @given(st.integers(1, 10**6))
    def test_two_adic_split_recombines(self, n: int) -> None:
        valuation, odd_part = two_adic_split(n)
        assert odd_part % 2 == 1
        assert 2**valuation * odd_part == n

    @pytest.mark.parametrize(
        "values, expected",
        [([24, 32, 48], 8), ([4, 6], 2), ([15, 21, 35], 1), ([0, -6], 6)],
        ids=["worked example", "pair", "coprime", "zero and negative"],
    )
    def test_gcd_all(self, values: list[int], expected: int) -> None:
        assert gcd_all(values) == expected

    @pytest.mark.parametrize("values", [[], [0, 0]], ids=["empty", "zeros"])
    def test_gcd_all_invalid(self, values: list[int]) -> None:
        with pytest.raises(ValueError):
            gcd_all(values)

    def test_lcm_all(self) -> None:
        assert lcm_all([4, 6, 8]) == 24
        assert lcm_all([-3, 5]) == 15
        with pytest.raises(ValueError):
            lcm_all([3, 0])

    @pytest.mark.parametrize(
        "values, expected",
        [((2, 3, 5), True), ((2, 4, 5), False), ((7,), True)],
        ids=["coprime", "shared factor", "single"],
    )
    def test_pairwise_coprime(self, values: tuple, expected: bool) -> None:
        assert pairwise_coprime(values) is expected
