import pytest

from app.core.exceptions import DimensionMismatchError, UnsupportedSurfaceError
from app.models.picard import DivisorClass, PositionAssumption, SurfaceModel, anticanonical
from app.services.curve_atlas_service import CurveAtlasService

VERY_GENERAL_10 = SurfaceModel(10, PositionAssumption.VERY_GENERAL)


@pytest.mark.parametrize(
    "cls,admissible",
    [
        (DivisorClass(4, (1,) * 13), False),
        (DivisorClass(3, (1,) * 9 + (0,)), False),
        (DivisorClass(1, (1, 1) + (0,) * 8), True),
        (DivisorClass(3, (2,) + (1,) * 6 + (0,) * 3), True),
    ],
)
def test_rational_class_admissible(positivity, cls, admissible):
    assert positivity.rational_class_admissible(cls) == admissible


def test_admissibility_preconditions(positivity):
    with pytest.raises(UnsupportedSurfaceError):
        positivity.rational_class_admissible(DivisorClass(1, (1,) * 10), SurfaceModel(10))
    with pytest.raises(ValueError):
        positivity.rational_class_admissible(DivisorClass(0, (-1,) + (0,) * 9), VERY_GENERAL_10)


def test_admissible_classes_meet_minus_k_positively(positivity, rng):
    for _ in range(500):
        d = rng.randint(1, 15)
        cls = DivisorClass(d, tuple(rng.randint(0, d) for _ in range(13)))
        if positivity.rational_class_admissible(cls):
            assert 3 * d - sum(cls.a) >= 1


def test_nef_against_generators(positivity):
    minus_k = anticanonical(6)
    assert positivity.is_nef_against(minus_k, CurveAtlasService().minus_one_classes(6))
    assert not positivity.is_nef_against(anticanonical(10), [DivisorClass(3, (1,) * 10)])
    # -K_6 - (3/2) E scaled by 2 is nef on X_7 and vanishes on the binding cubic
    boundary = DivisorClass(6, (2,) * 6 + (3,))
    assert positivity.is_nef_against(boundary, CurveAtlasService().minus_one_classes(7))
    with pytest.raises(DimensionMismatchError):
        positivity.is_nef_against(minus_k, [DivisorClass.line(7)])


def test_scan_minimum_is_one(positivity):
    scan = positivity.rational_scan(10, 6)
    assert scan.minimum == 1
    assert scan.exceptional_minimum == 1
    assert scan.rejected > 0
    assert scan.nonpositive_rejected
    assert scan.positive


@pytest.mark.parametrize("d_max", [0, -3])
def test_scan_bound_must_be_positive(positivity, d_max):
    with pytest.raises(ValueError):
        positivity.rational_scan(10, d_max)
    with pytest.raises(ValueError):
        positivity.counterexample("thirteen-points", d_max)


@pytest.mark.slow
def test_ten_points(positivity):
    report = positivity.verify_ten_point_example()
    assert report.k_squared == -1
    assert not report.nef
    assert report.nef_certificate["class"] == "3:" + ",".join(["1"] * 10)
    assert report.nef_certificate["minus_k_dot"] == -1
    assert report.nef_certificate["arithmetic_genus"] == 1
    assert report.nef_certificate["rational_admissible"] is False
    assert report.pseff
    assert report.rational_positive
    assert report.scan.d_max == 12
    assert report.scan.minimum >= 1


@pytest.mark.slow
def test_thirteen_points(positivity):
    report = positivity.verify_thirteen_point_example()
    payload = report.to_dict()
    assert report.k_squared == -4
    assert payload["quartic_pencil_dim"] == 1
    assert payload["cubic_expected_dim"] == -4
    assert payload["cubic_empty"] is True
    assert not report.pseff
    assert not report.nef
    assert payload["nef_implied_by_pseff"] is True
    assert report.pseff_certificate["minus_k_dot"] == -1
    assert report.pseff_certificate["self_intersection"] == 3
    assert report.pseff_certificate["arithmetic_genus"] == 3
    assert report.rational_positive
    assert payload["rational_scan"]["analytic_guarantee"] is True


def test_counterexample_lookup(positivity):
    report = positivity.counterexample("thirteen-points", 4)
    assert not report.pseff
    assert report.rational_positive
    with pytest.raises(ValueError):
        positivity.counterexample("eleven-points")
