from unittest.mock import patch

import pytest

from casson_invariants.invariants import (
    Caveat,
    decompose_lambda_zero,
)
from casson_invariants.manifolds import (
    ConnectedSum,
    SeifertHSSpec,
    SmallSeifertSpec,
    parse_manifold_expr,
)


class TestDecomposeLambdaZero:
    def test_worked_example(self, worked_example: SmallSeifertSpec) -> None:
        report = decompose_lambda_zero(worked_example)
        assert report.manifold == "SSF(4,6,8;1,1,1)"
        assert str(report.lambda_psl) == "101/4"
        assert str(report.lambda_sl) == "30"
        assert str(report.h1) == "Z/2+Z/52"
        assert report.h1_z2_order == 4
        assert str(report.lambda_zero) == "15/2"
        assert str(report.residual) == "71/4"
        assert report.caveats == (
            Caveat.NON_HAKEN_UNCHECKED,
            Caveat.CONJECTURAL_RESIDUAL,
        )
        assert report.census is not None
        assert report.census.total == 83

    def test_odd_example_has_no_residual(
        self, odd_example: SmallSeifertSpec
    ) -> None:
        report = decompose_lambda_zero(odd_example)
        assert report.lambda_zero == report.lambda_psl == 12
        assert report.residual == 0
        assert report.caveats == (Caveat.NON_HAKEN_UNCHECKED,)

    def test_homology_sphere_has_no_caveats(
        self, poincare_sphere: SeifertHSSpec
    ) -> None:
        report = decompose_lambda_zero(poincare_sphere)
        assert report.caveats == ()
        assert report.census is None
        assert str(report.h1) == "0"
        assert report.h1_z2_order == 1

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("SSF(2,3,5;1,1,1)", Caveat.NON_HYPERBOLIC_BASE),
            ("SSF(2,4,5;1,1,1)", Caveat.UNPROVED_CASE),
        ],
        ids=["spherical base", "unproved case"],
    )
    def test_leaf_caveats(self, text: str, expected: Caveat) -> None:
        assert expected in decompose_lambda_zero(
            parse_manifold_expr(text)
        ).caveats

    def test_sum_caveats_are_unique(
        self, worked_example: SmallSeifertSpec
    ) -> None:
        report = decompose_lambda_zero(
            ConnectedSum(worked_example, worked_example)
        )
        assert report.caveats.count(Caveat.NON_HAKEN_UNCHECKED) == 1
        assert report.census is None
        assert str(report.lambda_zero) == "15"

    def test_anomaly(self, odd_example: SmallSeifertSpec, caplog) -> None:
        with patch(
            "casson_invariants.invariants.report.two_torsion_order",
            return_value=32,
        ):
            report = decompose_lambda_zero(odd_example)
        assert report.lambda_zero is None
        assert report.residual is None
        assert Caveat.LAMBDA_ZERO_ANOMALY in report.caveats
        assert "not divisible" in caplog.text
