import pytest
from hypothesis import given

from casson_invariants.exceptions import (
    ExpressionSyntaxError,
    ManifoldValidationError,
)
from casson_invariants.manifolds import (
    ConnectedSum,
    SeifertHSSpec,
    SmallSeifertSpec,
    TwistSurgerySpec,
    connected_sum,
    parse_manifold_expr,
    render,
)
from casson_invariants.manifolds.parser import tokenize
from tests.fixtures.strategies import expressions


class TestTokenize:
    def test_drops_whitespace(self) -> None:
        tokens = tokenize(" SHS( 2 ,3)")
        assert [token.kind for token in tokens] == [
            "name",
            "punct",
            "int",
            "punct",
            "int",
            "punct",
            "end",
        ]
        assert tokens[0].position == 1

    def test_bad_character(self) -> None:
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            tokenize("SHS(2,3)*")
        assert exc_info.value.position == 8

    def test_non_ascii_digit(self) -> None:
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            tokenize("SHS(2,3,\u0665)")
        assert exc_info.value.position == 8


class TestParseManifoldExpr:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("SHS(2,3,5)", SeifertHSSpec((2, 3, 5))),
            ("shs(7)", SeifertHSSpec((7,))),
            ("SSF(4,6,8;1,1,1)", SmallSeifertSpec(4, 6, 8, 1, 1, 1)),
            (
                " SSF( 3, 5, 7 ; -1, 2, 1 ) ",
                SmallSeifertSpec(3, 5, 7, -1, 2, 1),
            ),
            ("TW(2;-5/3)", TwistSurgerySpec(2, 5, -3)),
            (
                "SHS(2,3,5) # SHS(2,3,7) # TW(1;1/1)",
                ConnectedSum(
                    ConnectedSum(
                        SeifertHSSpec((2, 3, 5)), SeifertHSSpec((2, 3, 7))
                    ),
                    TwistSurgerySpec(1, 1, 1),
                ),
            ),
            (
                "SHS(2,3,5) # (SHS(2,3,7) # TW(1;1/1))",
                ConnectedSum(
                    SeifertHSSpec((2, 3, 5)),
                    ConnectedSum(
                        SeifertHSSpec((2, 3, 7)), TwistSurgerySpec(1, 1, 1)
                    ),
                ),
            ),
        ],
        ids=[
            "shs",
            "lowercase single",
            "ssf",
            "whitespace",
            "twist",
            "left associative",
            "parenthesized",
        ],
    )
    def test_parse(self, text: str, expected) -> None:
        assert parse_manifold_expr(text) == expected

    @pytest.mark.parametrize(
        "text, position",
        [
            ("", 0),
            ("XYZ(1)", 0),
            ("SHS(2,3", 7),
            ("SSF(4,6;1,1,1)", 7),
            ("SHS(2,3,5) #", 12),
            ("SHS(2,3,5) SHS(2,3,7)", 11),
            ("TW(1;5)", 6),
        ],
        ids=[
            "empty",
            "unknown family",
            "unclosed",
            "missing order",
            "dangling sum",
            "missing operator",
            "missing slope",
        ],
    )
    def test_syntax_errors(self, text: str, position: int) -> None:
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_manifold_expr(text)
        assert exc_info.value.position == position

    def test_validates_leaves(self) -> None:
        with pytest.raises(ManifoldValidationError) as exc_info:
            parse_manifold_expr("SHS(2,3,5) # SSF(4,6,8;2,1,1)")
        assert exc_info.value.hypothesis == "gcd(a,p) ≠ 1"


class TestRender:
    @pytest.mark.parametrize(
        "expr, expected",
        [
            (SeifertHSSpec((2, 3, 5)), "SHS(2,3,5)"),
            (SmallSeifertSpec(4, 6, 8, 1, 1, 1), "SSF(4,6,8;1,1,1)"),
            (TwistSurgerySpec.from_slope(2, -5, 3), "TW(2;-5/3)"),
            (
                connected_sum(
                    SeifertHSSpec((2, 3, 5)),
                    SmallSeifertSpec(4, 6, 8, 1, 1, 1),
                ),
                "SHS(2,3,5) # SSF(4,6,8;1,1,1)",
            ),
            (
                ConnectedSum(
                    SeifertHSSpec((2, 3, 5)),
                    ConnectedSum(
                        SeifertHSSpec((2, 3, 7)), SeifertHSSpec((2, 5, 7))
                    ),
                ),
                "SHS(2,3,5) # (SHS(2,3,7) # SHS(2,5,7))",
            ),
        ],
        ids=["shs", "ssf", "twist", "sum", "right nested"],
    )
    def test_render(self, expr, expected: str) -> None:
        assert render(expr) == expected

    def test_render_not_an_expression(self) -> None:
        with pytest.raises(TypeError):
            render((2, 3, 5))

    @given(expressions())
    def test_parse_inverts_render(self, drawn) -> None:
        expr, _ = drawn
        assert parse_manifold_expr(render(expr)) == expr
