import pytest

from app.core.exceptions import InvalidLinearSystemError
from app.models.picard import PositionAssumption, SurfaceModel
from app.services.linear_system_service import LinearSystemSpec, component_bound, degree_splits


@pytest.mark.parametrize(
    "d,mults,expected",
    [
        (6, (2,) * 7 + (3,), 0),
        (4, (1,) * 13, 1),
        (3, (1,) * 13, -4),
        (3, (1,) * 6 + (2,), 0),
        (3, (1,) * 8 + (2,), -2),
        (1, (1, 1), 0),
        (2, (), 5),
    ],
)
def test_expected_dim(linear_systems, d, mults, expected):
    assert linear_systems.expected_dim(LinearSystemSpec(d, mults)) == expected
    assert linear_systems.nonempty_at_general_points(LinearSystemSpec(d, mults)) == (expected >= 0)


def test_incrementing_a_multiplicity_never_creates_curves(linear_systems, rng):
    for _ in range(500):
        d = rng.randint(1, 12)
        spec = LinearSystemSpec(d, tuple(rng.randint(1, d) for _ in range(rng.randint(1, 10))))
        bumped = spec.incremented(rng.randrange(len(spec.mults)))
        assert linear_systems.expected_dim(bumped) < linear_systems.expected_dim(spec)
        if linear_systems.nonempty_at_general_points(bumped):
            assert linear_systems.nonempty_at_general_points(spec)


def test_expected_dim_is_symmetric(linear_systems, rng):
    for _ in range(200):
        mults = [rng.randint(1, 5) for _ in range(rng.randint(1, 9))]
        shuffled = list(mults)
        rng.shuffle(shuffled)
        assert linear_systems.expected_dim(LinearSystemSpec(7, tuple(mults))) == linear_systems.expected_dim(
            LinearSystemSpec(7, tuple(shuffled))
        )


def test_emptiness_needs_very_general_points(linear_systems):
    cubics = LinearSystemSpec(3, (1,) * 13)
    assert linear_systems.empty_at_very_general_points(cubics, SurfaceModel(13, PositionAssumption.VERY_GENERAL))
    assert not linear_systems.empty_at_very_general_points(cubics, SurfaceModel(13))


def test_invalid_specs():
    with pytest.raises(InvalidLinearSystemError):
        LinearSystemSpec(0, (1,))
    with pytest.raises(InvalidLinearSystemError):
        LinearSystemSpec(3, (1, 0))


def test_bezout_bound(linear_systems):
    assert linear_systems.bezout_mult_bound(3, 1, 2 + 1)
    assert linear_systems.bezout_mult_bound(6, 3, 18)
    assert not linear_systems.bezout_mult_bound(6, 3, 19)
    with pytest.raises(InvalidLinearSystemError):
        linear_systems.bezout_mult_bound(0, 3, 1)


def test_degree_splits():
    assert degree_splits(3) == [(2, 1), (1, 1, 1)]
    assert (3, 3) in degree_splits(6)
    assert all(len(parts) >= 2 and sum(parts) == 6 for parts in degree_splits(6))
    assert component_bound(3) == 8


def test_sextic_decompositions_excluded(linear_systems):
    report = linear_systems.decomposition_excluded_r7()
    assert report.required_total == 17
    assert report.expected_dim == 0
    assert report.bezout_total == 18
    assert report.bezout_equality
    assert report.case(3, 3).max_total == 16
    assert report.case(5, 1).component_bounds == (14, 2)
    assert report.case(5, 1).max_total == 16
    assert report.case(4, 2).max_total == 16
    assert report.case(2, 2, 2).max_total == 15
    assert {case.parts for case in report.cases if case.listed} == {(3, 3), (5, 1), (4, 2), (2, 2, 2)}
    assert report.all_excluded
    assert all(all(case.bezout_certificates) for case in report.cases)


def test_bezout_certificates_need_a_real_overflow(linear_systems):
    # three simple points leave every split of a sextic feasible
    for case in linear_systems.decomposition_exclusions(6, (1, 1, 1)):
        assert not case.excluded
        assert not any(case.bezout_certificates)
    cubic = linear_systems.double_point_cubic_report()
    assert cubic.case(2, 1).bezout_certificates == (True, True)


def test_double_point_cubic(linear_systems):
    report = linear_systems.double_point_cubic_report()
    assert report.required_total == 8
    assert report.expected_dim == 0
    assert report.bezout_total == 3
    assert report.bezout_equality
    assert report.case(2, 1).max_total == 7
    assert report.case(1, 1, 1).max_total == 6
    assert report.all_excluded


def test_smooth_cubic_through_point(linear_systems):
    assert linear_systems.smooth_cubic_exists(7)
    assert not linear_systems.smooth_cubic_exists(8)
