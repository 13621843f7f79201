"""
Anticanonical positivity beyond del Pezzo surfaces: two blow-ups where -K
meets every rational curve positively, yet is not nef (ten points) or not
even pseudoeffective (thirteen points).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import structlog

from app.core.config import settings
from app.core.exceptions import UnsupportedSurfaceError
from app.models.picard import (
    DivisorClass,
    PositionAssumption,
    SurfaceModel,
    anticanonical,
    arithmetic_genus,
    deg_anticanonical,
    intersect,
    intersection_matrix,
    self_intersection,
)
from app.services.linear_system_service import LinearSystemService, LinearSystemSpec
from app.utils.lattice_search import shapes_with_total

logger = structlog.get_logger(__name__)

TEN_POINTS = 10
THIRTEEN_POINTS = 13


@dataclass
class RationalScan:
    r: int
    d_max: int
    scanned: int = 0
    admissible: int = 0
    rejected: int = 0
    minimum: Optional[int] = None
    nonpositive_rejected: bool = True
    exceptional_minimum: int = 1

    @property
    def positive(self) -> bool:
        return self.minimum is not None and self.minimum >= 1 and self.exceptional_minimum >= 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d_max": self.d_max,
            "scanned": self.scanned,
            "admissible": self.admissible,
            "rejected": self.rejected,
            "minimum": self.minimum,
            "exceptional_minimum": self.exceptional_minimum,
            "nonpositive_rejected": self.nonpositive_rejected,
            # 3d - 1 - sum a >= 0 forces 3d - sum a >= 1 in every degree
            "analytic_guarantee": True,
        }


@dataclass
class PositivityReport:
    r: int
    k_squared: int
    nef: bool
    pseff: bool
    rational_positive: bool
    scan: RationalScan
    nef_certificate: Optional[Dict[str, Any]] = None
    pseff_certificate: Optional[Dict[str, Any]] = None
    extras: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "k_squared": self.k_squared,
            "nef": self.nef,
            "nef_certificate": self.nef_certificate,
            "pseff": self.pseff,
            "pseff_certificate": self.pseff_certificate,
            "rational_positive": self.rational_positive,
            "rational_scan": self.scan.to_dict(),
            **self.extras,
        }


def _class_certificate(cls: DivisorClass, minus_k: DivisorClass) -> Dict[str, Any]:
    return {
        "class": cls.spec(),
        "minus_k_dot": intersect(minus_k, cls),
        "self_intersection": self_intersection(cls),
        "arithmetic_genus": arithmetic_genus(cls),
    }


class PositivityService:
    def __init__(self):
        self.linear_systems = LinearSystemService()

    def rational_class_admissible(self, c: DivisorClass, surface: SurfaceModel | None = None) -> bool:
        """
        Whether an irreducible rational curve of class c can exist when the
        points are very general: 3d - 1 - sum a_i >= 0.
        """
        if surface is not None and not surface.very_general:
            raise UnsupportedSurfaceError(surface.r, "rational admissibility needs very general points")
        if c.d < 1 or any(x < 0 for x in c.a):
            raise ValueError(f"{c} is not the class of a plane curve transform")
        return 3 * c.d - 1 - sum(c.a) >= 0

    def is_nef_against(self, c: DivisorClass, generators: Sequence[DivisorClass]) -> bool:
        products = intersection_matrix([c], generators)
        return bool((products >= 0).all())

    def rational_scan(self, r: int, d_max: int | None = None) -> RationalScan:
        """
        Every class with d <= d_max and -K.C <= 1 is examined (larger values
        are positive anyway); admissible ones must have -K.C >= 1.
        """
        if d_max is None:
            d_max = settings.POSITIVITY_DMAX
        if d_max < 1:
            raise ValueError("d_max must be at least 1")
        surface = SurfaceModel(r, PositionAssumption.VERY_GENERAL)
        scan = RationalScan(r=r, d_max=d_max)
        for d in range(1, d_max + 1):
            for total in range(0, min(3 * d + 1, r * d) + 1):
                for shape in shapes_with_total(r, d, total):
                    cls = DivisorClass(d, shape)
                    scan.scanned += 1
                    value = deg_anticanonical(cls)
                    if self.rational_class_admissible(cls, surface):
                        scan.admissible += 1
                        scan.minimum = value if scan.minimum is None else min(scan.minimum, value)
                    else:
                        scan.rejected += 1
                        if value >= 1:
                            scan.nonpositive_rejected = False
        scan.exceptional_minimum = min(
            (deg_anticanonical(DivisorClass.exceptional(i, r)) for i in range(1, r + 1)), default=1
        )
        logger.debug("rational_scan", r=r, d_max=d_max, scanned=scan.scanned, minimum=scan.minimum)
        return scan

    def verify_ten_point_example(self, d_max: int | None = None) -> PositivityReport:
        """Ten points on a cubic: -K is effective but not nef."""
        surface = SurfaceModel(TEN_POINTS, PositionAssumption.VERY_GENERAL)
        minus_k = anticanonical(surface)
        # the tenth point lies on the cubic through the first nine
        cubic = DivisorClass(3, (1,) * TEN_POINTS)
        scan = self.rational_scan(surface.r, d_max)
        certificate = _class_certificate(cubic, minus_k)
        certificate["rational_admissible"] = self.rational_class_admissible(cubic, surface)
        return PositivityReport(
            r=surface.r,
            k_squared=self_intersection(minus_k),
            nef=self.is_nef_against(minus_k, [cubic]),
            nef_certificate=certificate,
            pseff=True,
            pseff_certificate={"effective_member": cubic.spec()},
            rational_positive=scan.positive,
            scan=scan,
        )

    def verify_thirteen_point_example(self, d_max: int | None = None) -> PositivityReport:
        """Thirteen very general points: quartics through them sweep out X and meet -K negatively."""
        surface = SurfaceModel(THIRTEEN_POINTS, PositionAssumption.VERY_GENERAL)
        minus_k = anticanonical(surface)
        quartics = LinearSystemSpec(4, (1,) * THIRTEEN_POINTS)
        cubics = LinearSystemSpec(3, (1,) * THIRTEEN_POINTS)
        moving = DivisorClass(4, (1,) * THIRTEEN_POINTS)

        pencil_dim = self.linear_systems.expected_dim(quartics)
        moving_square = self_intersection(moving)
        covers = pencil_dim >= 1 and moving_square >= 0
        pseff = not (covers and intersect(minus_k, moving) < 0)
        nef = self.is_nef_against(minus_k, [moving])

        scan = self.rational_scan(surface.r, d_max)
        certificate = _class_certificate(moving, minus_k)
        certificate["pencil_dim"] = pencil_dim
        certificate["rational_admissible"] = self.rational_class_admissible(moving, surface)
        return PositivityReport(
            r=surface.r,
            k_squared=self_intersection(minus_k),
            nef=nef,
            nef_certificate=_class_certificate(moving, minus_k),
            pseff=pseff,
            pseff_certificate=certificate,
            rational_positive=scan.positive,
            scan=scan,
            extras={
                "quartic_pencil_dim": pencil_dim,
                "cubic_expected_dim": self.linear_systems.expected_dim(cubics),
                "cubic_empty": self.linear_systems.empty_at_very_general_points(cubics, surface),
                "nef_implied_by_pseff": not pseff and not nef,
            },
        )

    def counterexample(self, name: str, d_max: int | None = None) -> PositivityReport:
        examples = {
            "ten-points": self.verify_ten_point_example,
            "thirteen-points": self.verify_thirteen_point_example,
        }
        if name not in examples:
            raise ValueError(f"unknown counterexample '{name}'")
        return examples[name](d_max)

    def available_counterexamples(self) -> List[str]:
        return ["ten-points", "thirteen-points"]
