import pytest

from casson_invariants.manifolds import (
    ConnectedSum,
    SeifertHSSpec,
    SmallSeifertSpec,
    TwistSurgerySpec,
    connected_sum,
    leaves,
)


class TestSmallSeifertSpec:
    def test_accessors(self, worked_example: SmallSeifertSpec) -> None:
        assert worked_example.orders == (4, 6, 8)
        assert worked_example.coefficients == (1, 1, 1)
        assert worked_example.fibers == ((4, 1), (6, 1), (8, 1))
        assert worked_example.euler_numerator == 104

    def test_from_fibers(self) -> None:
        spec = SmallSeifertSpec.from_fibers(((3, 1), (5, 2), (7, -1)))
        assert spec == SmallSeifertSpec(3, 5, 7, 1, 2, -1)
        with pytest.raises(ValueError):
            SmallSeifertSpec.from_fibers(((3, 1), (5, 2)))

    def test_mirror(self, odd_example: SmallSeifertSpec) -> None:
        mirrored = odd_example.mirror()
        assert mirrored.coefficients == (-1, -1, -1)
        assert mirrored.euler_numerator == -odd_example.euler_numerator
        assert mirrored.mirror() == odd_example


class TestTwistSurgerySpec:
    def test_from_slope_normalizes_sign(self) -> None:
        spec = TwistSurgerySpec.from_slope(2, -5, 3)
        assert (spec.p, spec.q) == (5, -3)
        assert spec.slope == (-5, 3)

    def test_original_slope_is_not_compared(self) -> None:
        assert TwistSurgerySpec.from_slope(1, -5, 1) == TwistSurgerySpec(
            1, 5, -1
        )

    def test_slope_without_original(self) -> None:
        assert TwistSurgerySpec(3, 7, 2).slope == (7, 2)


class TestConnectedSum:
    def test_left_fold(self, poincare_sphere: SeifertHSSpec) -> None:
        other = SeifertHSSpec((2, 3, 7))
        third = SeifertHSSpec((2, 5, 7))
        expr = connected_sum(poincare_sphere, other, third)
        assert expr == ConnectedSum(
            ConnectedSum(poincare_sphere, other), third
        )
        assert list(leaves(expr)) == [poincare_sphere, other, third]

    def test_single_part(self, poincare_sphere: SeifertHSSpec) -> None:
        assert connected_sum(poincare_sphere) is poincare_sphere
        assert list(leaves(poincare_sphere)) == [poincare_sphere]

    def test_no_parts(self) -> None:
        with pytest.raises(ValueError):
            connected_sum()

    def test_multiplicities_coerced(self) -> None:
        assert SeifertHSSpec([2, 3, 5]).multiplicities == (2, 3, 5)
