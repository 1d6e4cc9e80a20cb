import pytest

from casson_invariants.manifolds import (
    SeifertHSSpec,
    SmallSeifertSpec,
    TwistSurgerySpec,
)


@pytest.fixture
def worked_example() -> SmallSeifertSpec:
    return SmallSeifertSpec(4, 6, 8, 1, 1, 1)


@pytest.fixture
def odd_example() -> SmallSeifertSpec:
    return SmallSeifertSpec(3, 5, 7, 1, 1, 1)


@pytest.fixture
def poincare_sphere() -> SeifertHSSpec:
    return SeifertHSSpec((2, 3, 5))


@pytest.fixture
def trefoil_lens_surgery() -> TwistSurgerySpec:
    return TwistSurgerySpec.from_slope(1, 5, 1)
