import itertools
import math

import pytest

from casson_invariants.arithmetic import smith_normal_form
from casson_invariants.cli.sweep import sweep_specs
from casson_invariants.exceptions import EnumerationCapExceeded
from casson_invariants.invariants import (
    lambda_sl_small_seifert,
    triangle_presentation,
)
from casson_invariants.manifolds import SmallSeifertSpec
from casson_invariants.oracle import (
    count_diagonal_characters,
    count_sl_irreducible,
    count_triangle_reducible,
)
from casson_invariants.oracle.counting import check_cap


class TestCountSlIrreducible:
    @pytest.mark.parametrize(
        "spec, expected",
        [
            (SmallSeifertSpec(4, 6, 8, 1, 1, 1), (6, 24)),
            (SmallSeifertSpec(3, 5, 7, 1, 1, 1), (6, 6)),
            (SmallSeifertSpec(2, 2, 2, 1, 1, 1), (0, 1)),
        ],
        ids=["worked example", "all odd", "quaternion"],
    )
    def test_counts(
        self, spec: SmallSeifertSpec, expected: tuple[int, int]
    ) -> None:
        assert count_sl_irreducible(spec) == expected

    def test_matches_formula(self, worked_example: SmallSeifertSpec) -> None:
        assert sum(count_sl_irreducible(worked_example)) == (
            lambda_sl_small_seifert(worked_example)
        )

    @pytest.mark.parametrize(
        "spec",
        [
            SmallSeifertSpec(4, 6, 8, 1, 1, 1),
            SmallSeifertSpec(2, 4, 5, 1, 1, 1),
            SmallSeifertSpec(3, 5, 7, 2, 1, -1),
        ],
        ids=["worked example", "two even", "mixed signs"],
    )
    def test_fiber_order_does_not_matter(self, spec: SmallSeifertSpec) -> None:
        expected = count_sl_irreducible(spec)
        for fibers in itertools.permutations(spec.fibers):
            permuted = SmallSeifertSpec.from_fibers(fibers)
            assert count_sl_irreducible(permuted) == expected, fibers

    def test_cap(self, worked_example: SmallSeifertSpec) -> None:
        with pytest.raises(EnumerationCapExceeded) as exc_info:
            count_sl_irreducible(worked_example, cap=100)
        assert exc_info.value.size == 192
        assert exc_info.value.cap == 100

    def test_check_cap_boundary(self) -> None:
        check_cap(100, 100)
        with pytest.raises(EnumerationCapExceeded):
            check_cap(101, 100)

    @pytest.mark.slow
    def test_all_even_orders_agree(self) -> None:
        for spec in sweep_specs(12, 2):
            if any(n % 2 for n in spec.orders):
                continue
            assert sum(count_sl_irreducible(spec)) == (
                lambda_sl_small_seifert(spec)
            ), spec


class TestTriangleReducible:
    @pytest.mark.parametrize(
        "orders, expected",
        [((4, 6, 8), 6), ((3, 5, 7), 1), ((2, 2, 2), 4), ((2, 3, 5), 1)],
        ids=["worked example", "all odd", "all two", "coprime"],
    )
    def test_count(self, orders: tuple[int, int, int], expected: int) -> None:
        assert count_triangle_reducible(*orders) == expected
        assert count_diagonal_characters(*orders) == expected

    @pytest.mark.slow
    def test_closed_form_and_brute_force(self) -> None:
        for p, q, r in itertools.product(range(2, 13), repeat=3):
            count = count_triangle_reducible(p, q, r)
            assert count == count_diagonal_characters(p, q, r), (p, q, r)
            group = smith_normal_form(triangle_presentation(p, q, r))
            factors = group.invariant_factors
            if len(factors) == 2 and all(d % 2 == 0 for d in factors):
                gcd_pairs = math.gcd(p * q, p * r, q * r)
                assert count == 2 + gcd_pairs // 2, (p, q, r)
