import pytest

from casson_invariants.exceptions import ManifoldValidationError
from casson_invariants.manifolds import (
    ConnectedSum,
    SeifertHSSpec,
    SmallSeifertSpec,
    TwistSurgerySpec,
    validate,
)


class TestValidate:
    @pytest.mark.parametrize(
        "spec",
        [
            SeifertHSSpec((2, 3, 5)),
            SeifertHSSpec((7,)),
            SmallSeifertSpec(4, 6, 8, 1, 1, 1),
            SmallSeifertSpec(2, 3, 5, -1, 1, 1),
            TwistSurgerySpec.from_slope(1, -5, 1),
            ConnectedSum(SeifertHSSpec((2, 3)), TwistSurgerySpec(2, 1, 1)),
        ],
        ids=["shs", "single", "ssf", "negative", "twist", "sum"],
    )
    def test_valid_is_idempotent(self, spec) -> None:
        assert validate(spec) is spec
        assert validate(validate(spec)) is spec

    @pytest.mark.parametrize(
        "spec, hypothesis",
        [
            (SeifertHSSpec(()), "no multiplicities"),
            (SeifertHSSpec((2, 0)), "multiplicity < 1"),
            (SeifertHSSpec((2, 3, 4)), "not pairwise coprime"),
            (SmallSeifertSpec(1, 6, 8, 1, 1, 1), "p < 2"),
            (SmallSeifertSpec(4, 6, 1, 1, 1, 1), "r < 2"),
            (SmallSeifertSpec(4, 6, 8, 2, 1, 1), "gcd(a,p) ≠ 1"),
            (SmallSeifertSpec(4, 6, 8, 1, 3, 1), "gcd(b,q) ≠ 1"),
            (
                SmallSeifertSpec(3, 3, 3, 1, 1, -2),
                "aqr+bpr+cpq = 0 (not a rational homology sphere)",
            ),
            (TwistSurgerySpec(0, 1, 1), "xi < 1"),
            (TwistSurgerySpec(1, 1, 0), "q = 0"),
            (TwistSurgerySpec(1, 4, 1), "p even (strict boundary slope risk)"),
            (TwistSurgerySpec(1, 9, 3), "gcd(p,q) ≠ 1"),
        ],
        ids=[
            "shs empty",
            "shs zero",
            "shs shared factor",
            "ssf small p",
            "ssf small r",
            "ssf gcd a",
            "ssf gcd b",
            "ssf euler zero",
            "twist xi",
            "twist q",
            "twist even p",
            "twist gcd",
        ],
    )
    def test_invalid(self, spec, hypothesis: str) -> None:
        with pytest.raises(ManifoldValidationError) as exc_info:
            validate(spec)
        assert exc_info.value.hypothesis == hypothesis
        assert hypothesis in str(exc_info.value)

    def test_invalid_is_value_error(self) -> None:
        with pytest.raises(ValueError):
            validate(SmallSeifertSpec(4, 6, 8, 2, 1, 1))

    def test_names_offending_values(self) -> None:
        with pytest.raises(ManifoldValidationError) as exc_info:
            validate(SeifertHSSpec((2, 3, 9)))
        assert exc_info.value.values == {"a2": 3, "a3": 9, "gcd": 3}

    def test_sum_checks_every_leaf(self) -> None:
        expr = ConnectedSum(SeifertHSSpec((2, 3, 5)), SeifertHSSpec((2, 4)))
        with pytest.raises(ManifoldValidationError):
            validate(expr)

    def test_not_a_spec(self) -> None:
        with pytest.raises(TypeError):
            validate("SHS(2,3,5)")
