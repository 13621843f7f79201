"""
Plane curves with assigned multiplicities: the dimension count, Bezout
multiplicity bounds and the decomposition arguments showing that the curves
realizing the Seshadri constants are irreducible and reduced.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import structlog
from sympy.utilities.iterables import partitions

from app.core.exceptions import InvalidLinearSystemError
from app.models.picard import SurfaceModel
from app.utils.lattice_search import triangular

logger = structlog.get_logger(__name__)

# Decompositions spelled out in the irreducibility arguments
R7_LISTED_SPLITS = {(3, 3), (5, 1), (4, 2), (2, 2, 2)}
R6_LISTED_SPLITS = {(2, 1), (1, 1, 1)}


@dataclass(frozen=True)
class LinearSystemSpec:
    d: int
    mults: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))
        if self.d < 1:
            raise InvalidLinearSystemError(f"Plane degree must be positive, got {self.d}")
        if any(m < 1 for m in self.mults):
            raise InvalidLinearSystemError(f"Multiplicities must be positive, got {self.mults}")

    def incremented(self, i: int) -> "LinearSystemSpec":
        mults = list(self.mults)
        mults[i] += 1
        return LinearSystemSpec(self.d, tuple(mults))


@dataclass(frozen=True)
class ExclusionCase:
    parts: Tuple[int, ...]
    component_bounds: Tuple[int, ...]
    max_total: int
    required_total: int
    listed: bool
    bezout_certificates: Tuple[bool, ...]

    @property
    def excluded(self) -> bool:
        return self.max_total < self.required_total


@dataclass
class ExclusionReport:
    d: int
    mults: Tuple[int, ...]
    required_total: int
    expected_dim: int
    bezout_total: int
    bezout_equality: bool
    cases: List[ExclusionCase] = field(default_factory=list)

    @property
    def all_excluded(self) -> bool:
        return all(case.excluded for case in self.cases)

    def case(self, *parts: int) -> ExclusionCase:
        key = tuple(sorted(parts, reverse=True))
        for case in self.cases:
            if case.parts == key:
                return case
        raise KeyError(key)


def component_bound(e: int) -> int:
    """
    Largest multiplicity total a reduced degree-e component can carry at the
    assigned points: a cubic through those points and one further point of
    the component meets it in 3e points at most.
    """
    return 3 * e - 1


def degree_splits(d: int) -> List[Tuple[int, ...]]:
    """Ways to write d as a sum of at least two component degrees, largest first."""
    splits = []
    for part in partitions(d):
        parts = tuple(v for v, mult in sorted(part.items(), reverse=True) for _ in range(mult))
        if len(parts) >= 2:
            splits.append(parts)
    return sorted(splits, reverse=True)


class LinearSystemService:
    def expected_dim(self, spec: LinearSystemSpec) -> int:
        """d(d+3)/2 - sum r_i(r_i+1)/2, the lower bound on the projective dimension."""
        return spec.d * (spec.d + 3) // 2 - sum(triangular(m) for m in spec.mults)

    def nonempty_at_general_points(self, spec: LinearSystemSpec) -> bool:
        return self.expected_dim(spec) >= 0

    def empty_at_very_general_points(self, spec: LinearSystemSpec, surface: SurfaceModel) -> bool:
        """Emptiness is only asserted when the points are very general."""
        return surface.very_general and self.expected_dim(spec) < 0

    def bezout_mult_bound(self, d: int, aux_degree: int, mult_sum: int) -> bool:
        if d < 1 or aux_degree < 1:
            raise InvalidLinearSystemError("Bezout degrees must be positive")
        return mult_sum <= d * aux_degree

    def decomposition_exclusions(
        self, d: int, mults: Sequence[int], listed: set | None = None
    ) -> List[ExclusionCase]:
        required = sum(mults)
        listed = listed or set()
        cases = []
        for parts in degree_splits(d):
            bounds = tuple(component_bound(e) for e in parts)
            # what each component must carry once the others are at their bound,
            # plus one further point met by the auxiliary cubic
            shares = tuple(required - (sum(bounds) - b) + 1 for b in bounds)
            certificates = tuple(not self.bezout_mult_bound(e, 3, s) for e, s in zip(parts, shares))
            cases.append(
                ExclusionCase(
                    parts=parts,
                    component_bounds=bounds,
                    max_total=sum(bounds),
                    required_total=required,
                    listed=parts in listed,
                    bezout_certificates=certificates,
                )
            )
        return cases

    def decomposition_excluded_r7(self) -> ExclusionReport:
        """The sextic double at seven points and triple at x is irreducible and reduced."""
        spec = LinearSystemSpec(6, (2,) * 7 + (3,))
        required = sum(spec.mults)
        # cubic through the eight points and a ninth point of the sextic
        bezout_total = required + 1
        report = ExclusionReport(
            d=spec.d,
            mults=spec.mults,
            required_total=required,
            expected_dim=self.expected_dim(spec),
            bezout_total=bezout_total,
            bezout_equality=bezout_total == spec.d * 3,
            cases=self.decomposition_exclusions(spec.d, spec.mults, R7_LISTED_SPLITS),
        )
        logger.debug("r7_exclusions_checked", all_excluded=report.all_excluded)
        return report

    def double_point_cubic_report(self) -> ExclusionReport:
        """The cubic through six points and double at x is irreducible and reduced."""
        spec = LinearSystemSpec(3, (1,) * 6 + (2,))
        # a line through x and a further point z of the cubic
        bezout_total = 2 + 1
        return ExclusionReport(
            d=spec.d,
            mults=spec.mults,
            required_total=sum(spec.mults),
            expected_dim=self.expected_dim(spec),
            bezout_total=bezout_total,
            bezout_equality=self.bezout_mult_bound(spec.d, 1, bezout_total)
            and not self.bezout_mult_bound(spec.d, 1, bezout_total + 1),
            cases=self.decomposition_exclusions(spec.d, spec.mults, R6_LISTED_SPLITS),
        )

    def smooth_cubic_exists(self, r: int) -> bool:
        """
        A smooth cubic passes through x and r <= 7 points in general position,
        wherever x lies. The weaker collinearity hypotheses are not modeled.
        """
        return 0 <= r and r + 1 <= 8

    def describe(self, spec: LinearSystemSpec) -> Dict:
        return {
            "d": spec.d,
            "mults": list(spec.mults),
            "expected_dim": self.expected_dim(spec),
            "nonempty": self.nonempty_at_general_points(spec),
        }
