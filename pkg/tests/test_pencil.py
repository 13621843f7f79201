import pytest
from sympy import Rational

from app.core.exceptions import DegenerateConfigurationError, NonReducedPencilError
from app.services.pencil_service import (
    CUBIC_MONOMIALS,
    DISCRIMINANT_DEGREE,
    macaulay_resultant,
    monomials,
)

# four collinear points on y = 0 plus four more
COLLINEAR = [(0, 0), (1, 0), (2, 0), (3, 0), (1, 5), (-2, 3), (4, 7), (-3, -1)]


def test_monomials():
    assert len(CUBIC_MONOMIALS) == 10
    assert CUBIC_MONOMIALS[0] == (3, 0, 0)
    assert len(monomials(4)) == 15


def test_resultant_of_coordinate_squares_is_one():
    squares = [{(2, 0, 0): 1}, {(0, 2, 0): 1}, {(0, 0, 2): 1}]
    assert macaulay_resultant(squares) == 1


def test_resultant_vanishes_on_common_zero():
    # x^2, y^2 and (x + y) z all vanish at (0 : 0 : 1)
    quadrics = [{(2, 0, 0): 1}, {(0, 2, 0): 1}, {(1, 0, 1): 1, (0, 1, 1): 1}]
    assert macaulay_resultant(quadrics) == 0


def test_resultant_of_fermat_member(pencil):
    # x^3 + y^3 + z^3 is smooth, so lambda = 0 gives a nonzero value
    G = [Rational(1) if m in ((3, 0, 0), (0, 3, 0), (0, 0, 3)) else Rational(0) for m in CUBIC_MONOMIALS]
    F = [Rational(0)] * 10
    assert pencil.resultant_at(F, G, Rational(0)) != 0


def test_wrong_point_count(pencil):
    with pytest.raises(DegenerateConfigurationError):
        pencil.pencil_basis(COLLINEAR[:7])


def test_repeated_points_drop_rank(pencil):
    points = COLLINEAR[4:] + COLLINEAR[4:]
    with pytest.raises(DegenerateConfigurationError):
        pencil.pencil_basis(points)


def test_not_a_plane_point(pencil):
    with pytest.raises(DegenerateConfigurationError):
        pencil.pencil_basis([(0, 0, 0)] + COLLINEAR[1:])


@pytest.mark.slow
def test_collinear_points_rejected(pencil):
    with pytest.raises((NonReducedPencilError, DegenerateConfigurationError)):
        pencil.cubic_pencil_discriminant(COLLINEAR)


@pytest.mark.slow
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_random_pencils_have_twelve_nodal_members(pencil, seed):
    sample = pencil.sample_pencil(seed)
    assert sample.seed == seed
    assert sample.degree == DISCRIMINANT_DEGREE
    assert sample.squarefree_degree == DISCRIMINANT_DEGREE
    assert sample.root_count == 12


@pytest.mark.slow
def test_discriminant_does_not_depend_on_nodes(pencil):
    sample = pencil.sample_pencil(7)
    again = pencil.cubic_pencil_discriminant(sample.points, nodes=range(100, 114))
    assert again.discriminant == sample.discriminant


@pytest.mark.slow
def test_sampling_is_reproducible(pencil):
    assert pencil.sample_pencil(11).to_dict() == pencil.sample_pencil(11).to_dict()


def test_resultant_above_degree_twelve_is_rejected(pencil, monkeypatch):
    general = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 3), (-1, 2), (3, -2), (5, 7)]
    monkeypatch.setattr(pencil, "resultant_at", lambda F, G, lam: lam**13)
    with pytest.raises(DegenerateConfigurationError):
        pencil.cubic_pencil_discriminant(general)


def test_sampling_bounds_must_be_positive(pencil):
    with pytest.raises(ValueError):
        pencil.sample_pencil(1, height=0)
    with pytest.raises(ValueError):
        pencil.sample_pencil(1, max_attempts=0)
