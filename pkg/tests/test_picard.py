import numpy as np
import pytest

from app.core.exceptions import DimensionMismatchError, InvalidPointSpecError, UnsupportedSurfaceError
from app.models.picard import (
    DivisorClass,
    SurfaceModel,
    anticanonical,
    arithmetic_genus,
    canonical,
    deg_anticanonical,
    gram_matrix,
    intersect,
    intersection_matrix,
    self_intersection,
    witness_genus,
)
from app.models.points import PointKind, PointSpec


def random_class(rng, r):
    return DivisorClass(rng.randint(-6, 6), tuple(rng.randint(-6, 6) for _ in range(r)))


def test_basic_products():
    assert self_intersection(DivisorClass.line(0)) == 1
    assert self_intersection(DivisorClass.exceptional(1, 4)) == -1
    assert intersect(DivisorClass.line(3), DivisorClass.exceptional(2, 3)) == 0
    assert self_intersection(DivisorClass(3, (1,) * 10)) == -1


@pytest.mark.parametrize("r,expected", [(0, 9), (5, 4), (6, 3), (8, 1), (9, 0), (10, -1), (13, -4)])
def test_anticanonical_degree(r, expected):
    assert self_intersection(anticanonical(SurfaceModel(r))) == expected
    assert anticanonical(r) == -canonical(r)


@pytest.mark.parametrize(
    "cls,genus",
    [
        (DivisorClass(2, (1,) * 5), 0),
        (DivisorClass(3, (1,) * 6 + (2,)), 0),
        (DivisorClass(6, (2,) * 7), 3),
        (DivisorClass(3, (1,) * 10), 1),
        (DivisorClass(4, (1,) * 13), 3),
    ],
)
def test_arithmetic_genus(cls, genus):
    assert arithmetic_genus(cls) == genus


def test_deg_anticanonical_examples():
    assert deg_anticanonical(DivisorClass(4, (1,) * 13)) == -1
    assert deg_anticanonical(DivisorClass(1, (1,))) == 2
    for m in range(1, 20):
        assert deg_anticanonical(DivisorClass(3 * m, (m,) * 8 + (m - 1,))) == 1


def test_witness_genus_subtracts_singularity():
    assert witness_genus(DivisorClass(3, (1,) * 6), 2) == 0
    assert witness_genus(DivisorClass(6, (2,) * 7), 3) == 0
    assert witness_genus(DivisorClass(3, (1,) * 8), 1) == 1


def test_form_is_bilinear_and_symmetric(rng):
    for _ in range(1000):
        r = rng.randint(0, 13)
        a, b, c = (random_class(rng, r) for _ in range(3))
        k = rng.randint(-4, 4)
        assert intersect(a, b) == intersect(b, a)
        assert intersect(a + b, c) == intersect(a, c) + intersect(b, c)
        assert intersect(a - b, c) == intersect(a, c) - intersect(b, c)
        assert intersect(k * a, c) == k * intersect(a, c)


def test_genus_ignores_point_order(rng):
    for _ in range(500):
        r = rng.randint(1, 13)
        c = random_class(rng, r)
        order = list(range(r))
        rng.shuffle(order)
        shuffled = c.permuted(order)
        assert arithmetic_genus(shuffled) == arithmetic_genus(c)
        assert self_intersection(shuffled) == self_intersection(c)


@pytest.mark.parametrize("r", range(0, 14))
def test_signature(r):
    eigenvalues = np.linalg.eigvalsh(gram_matrix(r).astype(float))
    assert (eigenvalues > 0).sum() == 1
    assert (eigenvalues < 0).sum() == r


def test_intersection_matrix_matches_pairwise(rng):
    rows = [random_class(rng, 6) for _ in range(5)]
    cols = [random_class(rng, 6) for _ in range(4)]
    products = intersection_matrix(rows, cols)
    assert products.shape == (5, 4)
    for i, a in enumerate(rows):
        for j, b in enumerate(cols):
            assert products[i, j] == intersect(a, b)


def test_mismatched_lattices():
    with pytest.raises(DimensionMismatchError):
        intersect(DivisorClass.line(2), DivisorClass.line(3))
    with pytest.raises(DimensionMismatchError):
        intersection_matrix([DivisorClass.line(2)], [DivisorClass.line(3)])


def test_parse_and_spec():
    conic = DivisorClass.parse("2:1,1,1,1,1", 5)
    assert conic == DivisorClass(2, (1, 1, 1, 1, 1))
    assert conic.spec() == "2:1,1,1,1,1"
    assert DivisorClass.parse("1:1", 3) == DivisorClass(1, (1, 0, 0))
    with pytest.raises(InvalidPointSpecError):
        DivisorClass.parse("two:1", 3)
    with pytest.raises(InvalidPointSpecError):
        DivisorClass.parse("1:1,1,1,1", 3)


def test_extend_restrict_permute():
    cubic = DivisorClass(3, (1,) * 6)
    lifted = cubic.extend(2)
    assert lifted.r == 7
    assert lifted.restrict(6) == cubic
    assert DivisorClass(3, (2, 1, 0)).permuted([2, 0, 1]) == DivisorClass(3, (0, 2, 1))
    assert DivisorClass.exceptional(2, 3).is_exceptional
    assert not DivisorClass(1, (1, 0, 0)).is_exceptional


def test_surface_model():
    assert SurfaceModel(9).euler_number() == 12
    assert SurfaceModel(8).is_del_pezzo
    assert not SurfaceModel(10).is_del_pezzo
    with pytest.raises(UnsupportedSurfaceError):
        SurfaceModel(-1)
    with pytest.raises(UnsupportedSurfaceError):
        SurfaceModel(9).require_del_pezzo()


def test_point_spec_parse():
    assert PointSpec.parse("general", 4).is_general
    assert PointSpec.parse("node", 8).kind == PointKind.ANTICANONICAL_NODE
    p = PointSpec.parse("distinguished:2:1,1,1,1,1", 6)
    assert p.cls == DivisorClass(2, (1, 1, 1, 1, 1, 0))
    assert p.to_dict() == {"kind": "distinguished", "class": "2:1,1,1,1,1,0"}
    with pytest.raises(InvalidPointSpecError):
        PointSpec.parse("somewhere", 4)
    with pytest.raises(InvalidPointSpecError):
        PointSpec.node().validate_shape(7)
    with pytest.raises(InvalidPointSpecError):
        PointSpec.on_distinguished(DivisorClass.exceptional(1, 8)).validate_shape(8)
