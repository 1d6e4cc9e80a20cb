from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from casson_invariants.arithmetic import QuarterRational

quarters = st.integers(-(10**12), 10**12).map(QuarterRational)


class TestQuarterRational:
    @pytest.mark.parametrize(
        "value, expected",
        [
            (QuarterRational(101), "101/4"),
            (QuarterRational(30), "15/2"),
            (QuarterRational(120), "30"),
            (QuarterRational(-3), "-3/4"),
            (QuarterRational(0), "0"),
        ],
        ids=["quarter", "half", "integer", "negative", "zero"],
    )
    def test_str(self, value: QuarterRational, expected: str) -> None:
        assert str(value) == expected
        assert QuarterRational.parse(expected) == value

    def test_from_fraction(self) -> None:
        assert QuarterRational.from_fraction(Fraction(15, 2)).quarters == 30
        assert QuarterRational.from_fraction(3) == QuarterRational.from_int(3)
        with pytest.raises(ValueError):
            QuarterRational.from_fraction(Fraction(1, 3))

    def test_rejects_non_integers(self) -> None:
        with pytest.raises(TypeError):
            QuarterRational(1.5)
        with pytest.raises(TypeError):
            QuarterRational(True)

    def test_arithmetic(self) -> None:
        a = QuarterRational(101)
        b = QuarterRational(30)
        assert a - b == QuarterRational(71)
        assert a + 1 == QuarterRational(105)
        assert 4 * b == QuarterRational(120) == 30
        assert -a == QuarterRational(-101)
        assert b * 2 == 15

    def test_comparison(self) -> None:
        assert QuarterRational(1) < QuarterRational(2)
        assert QuarterRational(4) >= 1
        assert QuarterRational(-1) < 0
        assert sorted([QuarterRational(3), QuarterRational(-2)]) == [
            QuarterRational(-2),
            QuarterRational(3),
        ]

    def test_hash_matches_integers(self) -> None:
        assert hash(QuarterRational(8)) == hash(2)
        assert len({QuarterRational(8), QuarterRational(8)}) == 1

    @pytest.mark.parametrize(
        "value, divisor, expected",
        [
            (QuarterRational(120), 4, QuarterRational(30)),
            (QuarterRational(8), 1, QuarterRational(8)),
            (QuarterRational(3), 2, None),
        ],
        ids=["exact", "unit", "not a quarter"],
    )
    def test_try_divide(
        self,
        value: QuarterRational,
        divisor: int,
        expected: QuarterRational | None,
    ) -> None:
        assert value.try_divide(divisor) == expected

    def test_try_divide_invalid(self) -> None:
        with pytest.raises(ValueError):
            QuarterRational(4).try_divide(0)

    @given(quarters, quarters)
    def test_addition_is_exact(
        self, a: QuarterRational, b: QuarterRational
    ) -> None:
        assert (a + b) - b == a
        assert (a + b).as_fraction() == a.as_fraction() + b.as_fraction()
