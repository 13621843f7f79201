"""
Singular members of the pencil of plane cubics through eight points.

The pencil lambda*F + G is read off the kernel of the 8 x 10 evaluation
matrix. A member is singular exactly when its three partial derivatives (three
ternary quadrics) have a common zero, so the discriminant in lambda is the
Macaulay resultant of the gradient. Its degree is at most 4 + 4 + 4 = 12, and
it is recovered exactly by interpolating resultant values at rational nodes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog
from sympy import Matrix, Poly, Rational, Symbol, igcd, ilcm, interpolate, nsimplify

from app.core.config import settings
from app.core.exceptions import DegenerateConfigurationError, NonReducedPencilError

logger = structlog.get_logger(__name__)

LAMBDA = Symbol("lambda")
DISCRIMINANT_DEGREE = 12
POINT_COUNT = 8

Exponent = Tuple[int, int, int]
TernaryForm = Dict[Exponent, Rational]


def monomials(degree: int) -> List[Exponent]:
    """Exponents of ternary monomials of a given degree, x-heavy first."""
    return sorted(
        ((i, j, degree - i - j) for i in range(degree + 1) for j in range(degree + 1 - i)),
        reverse=True,
    )


CUBIC_MONOMIALS = monomials(3)


def _as_rational(value) -> Rational:
    if isinstance(value, str):
        return Rational(value)
    return nsimplify(value, rational=True) if isinstance(value, float) else Rational(value)


def _homogenize(point: Sequence) -> Tuple[Rational, Rational, Rational]:
    coords = [_as_rational(c) for c in point]
    if len(coords) == 2:
        coords.append(Rational(1))
    if len(coords) != 3 or all(c == 0 for c in coords):
        raise DegenerateConfigurationError(f"Not a plane point: {point}")
    return tuple(coords)


def evaluation_matrix(points: Sequence[Tuple[Rational, Rational, Rational]]) -> Matrix:
    return Matrix([[x**i * y**j * z**k for (i, j, k) in CUBIC_MONOMIALS] for (x, y, z) in points])


def _primitive(vector: Matrix) -> List[Rational]:
    """Scale a rational kernel vector to coprime integers with a positive leading entry."""
    entries = [Rational(c) for c in vector]
    scale = ilcm(*[c.q for c in entries]) if len(entries) > 1 else entries[0].q
    ints = [int(c * scale) for c in entries]
    content = igcd(*ints) if len(ints) > 1 else abs(ints[0])
    lead = next(c for c in ints if c != 0)
    sign = 1 if lead > 0 else -1
    return [Rational(sign * c // content) for c in ints]


def _gradient(form: TernaryForm) -> List[TernaryForm]:
    parts: List[TernaryForm] = [{}, {}, {}]
    for exp, coeff in form.items():
        for axis in range(3):
            if exp[axis] == 0:
                continue
            lowered = list(exp)
            lowered[axis] -= 1
            key = tuple(lowered)
            parts[axis][key] = parts[axis].get(key, 0) + coeff * exp[axis]
    return parts


def macaulay_resultant(quadrics: Sequence[TernaryForm]) -> Optional[Rational]:
    """
    Resultant of three ternary quadrics as det(M) / det(A), M the Macaulay
    matrix in degree 4 and A its minor on the non-reduced monomials. The
    row of a monomial uses the first quadric whose variable squared divides
    it. Returns None when A is singular for this pairing of quadrics and
    variables.
    """
    degree = 1 + sum(2 - 1 for _ in quadrics)
    basis = monomials(degree)
    index = {m: n for n, m in enumerate(basis)}
    rows = []
    non_reduced = []
    for n, mono in enumerate(basis):
        divisible = [axis for axis in range(3) if mono[axis] >= 2]
        if len(divisible) >= 2:
            non_reduced.append(n)
        axis = divisible[0]
        quotient = list(mono)
        quotient[axis] -= 2
        row = [Rational(0)] * len(basis)
        for exp, coeff in quadrics[axis].items():
            target = tuple(q + e for q, e in zip(quotient, exp))
            row[index[target]] += coeff
        rows.append(row)
    full = Matrix(rows)
    minor = full.extract(non_reduced, non_reduced) if non_reduced else Matrix([[1]])
    minor_det = minor.det(method="bareiss")
    if minor_det == 0:
        return None
    return full.det(method="bareiss") / minor_det


@dataclass
class PencilSample:
    points: List[Tuple[Rational, Rational, Rational]]
    F: List[Rational]
    G: List[Rational]
    discriminant: Poly
    nodes: List[Rational] = field(default_factory=list)
    seed: Optional[int] = None
    attempts: int = 1

    @property
    def degree(self) -> int:
        return self.discriminant.degree()

    @property
    def squarefree_degree(self) -> int:
        return self.discriminant.sqf_part().degree()

    @property
    def root_count(self) -> int:
        """Singular members over C, counted with multiplicity."""
        return self.degree

    def to_dict(self) -> Dict:
        def q(value) -> str:
            return str(Rational(value))

        return {
            "points": [[q(c) for c in p] for p in self.points],
            "F": [q(c) for c in self.F],
            "G": [q(c) for c in self.G],
            "monomials": ["x^%d*y^%d*z^%d" % m for m in CUBIC_MONOMIALS],
            "discriminant": [q(c) for c in reversed(self.discriminant.all_coeffs())],
            "degree": self.degree,
            "squarefree_degree": self.squarefree_degree,
            "root_count": self.root_count,
            "nodes": [q(n) for n in self.nodes],
            "seed": self.seed,
            "attempts": self.attempts,
        }


class PencilService:
    def pencil_basis(self, points: Sequence[Sequence]) -> Tuple[list, List[Rational], List[Rational]]:
        if len(points) != POINT_COUNT:
            raise DegenerateConfigurationError(f"Expected {POINT_COUNT} points, got {len(points)}")
        projective = [_homogenize(p) for p in points]
        matrix = evaluation_matrix(projective)
        rank = matrix.rank()
        if rank < POINT_COUNT:
            raise DegenerateConfigurationError(
                f"The points impose only {rank} conditions on cubics"
            )
        kernel = matrix.nullspace()
        return projective, _primitive(kernel[0]), _primitive(kernel[1])

    def resultant_at(self, F: Sequence[Rational], G: Sequence[Rational], lam: Rational) -> Optional[Rational]:
        member: TernaryForm = {}
        for mono, f, g in zip(CUBIC_MONOMIALS, F, G):
            value = lam * f + g
            if value != 0:
                member[mono] = value
        gradient = _gradient(member)
        for order in permutations(range(3)):
            value = macaulay_resultant([gradient[a] for a in order])
            if value is not None:
                return value
        return None

    def cubic_pencil_discriminant(
        self, points: Sequence[Sequence], nodes: Sequence[int] | None = None
    ) -> PencilSample:
        projective, F, G = self.pencil_basis(points)
        candidates = [Rational(n) for n in (nodes if nodes is not None else range(0, 64))]
        samples: List[Tuple[Rational, Rational]] = []
        for lam in candidates:
            value = self.resultant_at(F, G, lam)
            if value is None:
                logger.info("resultant_minor_singular", node=str(lam))
                continue
            samples.append((lam, value))
            # one extra node confirms the degree bound
            if len(samples) == DISCRIMINANT_DEGREE + 2:
                break
        if len(samples) < DISCRIMINANT_DEGREE + 2:
            raise DegenerateConfigurationError("Not enough usable interpolation nodes")

        fit, check = samples[:-1], samples[-1]
        poly = Poly(interpolate(fit, LAMBDA), LAMBDA, domain="QQ")
        if poly.eval(check[0]) != check[1]:
            raise DegenerateConfigurationError("Resultant exceeds degree 12 in lambda")
        if poly.is_zero:
            raise NonReducedPencilError("Every member of the pencil is singular")
        _, cleared = poly.clear_denoms(convert=True)
        _, primitive = cleared.primitive()
        return PencilSample(
            points=projective,
            F=F,
            G=G,
            discriminant=Poly(primitive.as_expr(), LAMBDA, domain="QQ"),
            nodes=[lam for lam, _ in samples],
        )

    def random_points(self, rng: np.random.Generator, height: int) -> List[Tuple[Rational, Rational]]:
        def coordinate() -> Rational:
            num = int(rng.integers(-height, height + 1))
            den = int(rng.integers(1, height + 1))
            return Rational(num, den)

        return [(coordinate(), coordinate()) for _ in range(POINT_COUNT)]

    def sample_pencil(
        self, seed: int, height: int | None = None, max_attempts: int | None = None
    ) -> PencilSample:
        """Discriminant of a seeded random 8-point pencil, retrying degenerate draws."""
        if height is None:
            height = settings.PENCIL_SAMPLE_HEIGHT
        if max_attempts is None:
            max_attempts = settings.PENCIL_MAX_ATTEMPTS
        if height < 1 or max_attempts < 1:
            raise ValueError("height and max_attempts must be at least 1")
        rng = np.random.default_rng(seed)
        for attempt in range(1, max_attempts + 1):
            points = self.random_points(rng, height)
            try:
                sample = self.cubic_pencil_discriminant(points)
            except (DegenerateConfigurationError, NonReducedPencilError) as e:
                logger.warning("pencil_sample_rejected", seed=seed, attempt=attempt, reason=str(e))
                continue
            if sample.degree < DISCRIMINANT_DEGREE:
                # a singular member sits at lambda = infinity, redraw
                logger.info("pencil_sample_short_degree", seed=seed, attempt=attempt, degree=sample.degree)
                continue
            sample.seed = seed
            sample.attempts = attempt
            logger.info("pencil_sample_accepted", seed=seed, attempts=attempt, degree=sample.degree)
            return sample
        raise DegenerateConfigurationError(
            f"No general 8-point sample found for seed {seed} in {max_attempts} attempts"
        )
