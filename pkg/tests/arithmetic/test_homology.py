import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from casson_invariants.arithmetic import (
    AbelianGroup,
    IntMatrix,
    smith_normal_form,
    two_torsion_order,
)


class TestIntMatrix:
    def test_from_rows(self) -> None:
        matrix = IntMatrix.from_rows([[4, 0, -1], [0, 6, -1]])
        assert matrix.shape == (2, 3)
        assert matrix.entries == ((4, 0, -1), (0, 6, -1))

    @pytest.mark.parametrize(
        "rows",
        [[], [[]], [[1, 2], [3]], [[1.5]], [[True]]],
        ids=["no rows", "no columns", "ragged", "float", "bool"],
    )
    def test_from_rows_invalid(self, rows: list) -> None:
        with pytest.raises(ValueError):
            IntMatrix.from_rows(rows)

    def test_diagonal(self) -> None:
        assert IntMatrix.diagonal([2, 3]).entries == ((2, 0), (0, 3))


class TestAbelianGroup:
    @pytest.mark.parametrize(
        "factors",
        [(1,), (4, 2), (0, 3), (-2,)],
        ids=["unit factor", "not a chain", "free first", "negative"],
    )
    def test_invalid_factors(self, factors: tuple[int, ...]) -> None:
        with pytest.raises(ValueError):
            AbelianGroup(factors)

    @pytest.mark.parametrize(
        "group, expected",
        [
            (AbelianGroup.trivial(), "0"),
            (AbelianGroup((2, 52)), "Z/2+Z/52"),
            (AbelianGroup((3, 0)), "Z/3+Z"),
            (AbelianGroup.cyclic(71), "Z/71"),
            (AbelianGroup.cyclic(0), "Z"),
            (AbelianGroup.cyclic(1), "0"),
        ],
        ids=["trivial", "two factors", "mixed", "cyclic", "free", "unit"],
    )
    def test_str(self, group: AbelianGroup, expected: str) -> None:
        assert str(group) == expected

    def test_order_and_rank(self) -> None:
        group = AbelianGroup((2, 52))
        assert group.is_finite
        assert group.order == 104
        assert group.rank == 0
        free = AbelianGroup((0, 0))
        assert free.rank == 2
        with pytest.raises(ValueError):
            free.order

    def test_direct_sum_is_canonical(self) -> None:
        total = AbelianGroup.cyclic(2).direct_sum(AbelianGroup.cyclic(3))
        assert total == AbelianGroup((6,))
        assert AbelianGroup.trivial().direct_sum(
            AbelianGroup.trivial()
        ) == AbelianGroup.trivial()
        assert AbelianGroup((4,)).direct_sum(AbelianGroup((6,))) == (
            AbelianGroup((2, 12))
        )


class TestSmithNormalForm:
    @pytest.mark.parametrize(
        "rows, expected",
        [
            ([[4, 0, -1], [0, 6, -1], [8, 8, 1]], "Z/2+Z/52"),
            ([[3, 0, -1], [0, 5, -1], [7, 7, 1]], "Z/71"),
            ([[0]], "Z"),
            ([[1, 0], [0, 1]], "0"),
            ([[4, 0], [0, 6], [8, 8]], "Z/2+Z/4"),
            ([[2, 4]], "Z/2+Z"),
        ],
        ids=[
            "worked example",
            "cyclic",
            "zero",
            "identity",
            "triangle",
            "wide",
        ],
    )
    def test_presentations(self, rows: list[list[int]], expected: str) -> None:
        assert str(smith_normal_form(IntMatrix.from_rows(rows))) == expected

    def test_preserves_order(self) -> None:
        rows = [[12, 0], [0, 18]]
        group = smith_normal_form(IntMatrix.from_rows(rows))
        assert group.invariant_factors == (6, 36)
        assert group.order == 216

    @given(
        st.lists(
            st.lists(st.integers(-30, 30), min_size=3, max_size=3),
            min_size=3,
            max_size=3,
        )
    )
    def test_determinantal_divisors(self, rows: list[list[int]]) -> None:
        group = smith_normal_form(IntMatrix.from_rows(rows))
        torsion = [d for d in group.invariant_factors if d != 0]
        free = group.invariant_factors.count(0)
        diagonal = [1] * (3 - len(torsion) - free) + torsion + [0] * free

        minors = [
            rows[i][k] * rows[j][l] - rows[i][l] * rows[j][k]
            for i, j in itertools.combinations(range(3), 2)
            for k, l in itertools.combinations(range(3), 2)
        ]
        det = int(IntMatrix.from_rows(rows).to_sympy().det())
        assert diagonal[0] == math.gcd(*itertools.chain(*rows))
        assert diagonal[0] * diagonal[1] == math.gcd(*minors)
        assert math.prod(diagonal) == abs(det)


class TestTwoTorsion:
    @pytest.mark.parametrize(
        "factors, expected",
        [((2, 52), 4), ((3, 15), 1), ((), 1), ((6,), 2)],
        ids=["two even", "odd", "trivial", "one even"],
    )
    def test_two_torsion_order(
        self, factors: tuple[int, ...], expected: int
    ) -> None:
        assert two_torsion_order(AbelianGroup(factors)) == expected

    def test_infinite(self) -> None:
        with pytest.raises(ValueError):
            two_torsion_order(AbelianGroup((0,)))
