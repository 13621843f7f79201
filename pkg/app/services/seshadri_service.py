"""
Seshadri constants of -K on X_r at every point.

At a general point the constant is computed as the nef threshold of
-K_{X_r} - tE on the blow-up at one further point; the brute-force infimum
over candidate curves is kept as an independent oracle. Special points use
the distinguished curve (or the nodal anticanonical cubic for r = 8).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from app.core.config import settings
from app.core.exceptions import InvalidPointSpecError, NotAttainedError, UnsupportedSurfaceError
from app.models.picard import (
    MAX_DEL_PEZZO_POINTS,
    DivisorClass,
    SurfaceModel,
    anticanonical,
    deg_anticanonical,
    witness_genus,
)
from app.models.points import PointKind, PointSpec
from app.services.curve_atlas_service import (
    CurveAtlasService,
    candidate_shapes,
    minus_one_classes_up_to_degree,
)
from app.services.linear_system_service import LinearSystemService
from app.services.pencil_service import PencilService
from app.utils.lattice_search import triangular

logger = structlog.get_logger(__name__)

FAMILY_SHAPE = "(3m; m^8, m-1)"


@dataclass(frozen=True)
class Witness:
    cls: DivisorClass
    mult: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(deg_anticanonical(self.cls), self.mult)

    @property
    def genus(self) -> int:
        return witness_genus(self.cls, self.mult)

    def to_dict(self) -> Dict:
        return {"class": self.cls.spec(), "mult": self.mult, "genus": self.genus}


@dataclass(frozen=True)
class FamilyDescriptor:
    shape: str = FAMILY_SHAPE
    first_ratios: Tuple[Fraction, ...] = ()
    limit: Fraction = Fraction(1)

    def to_dict(self) -> Dict:
        return {
            "shape": self.shape,
            "first_ratios": [str(q) for q in self.first_ratios],
            "limit": str(self.limit),
        }


@dataclass
class SeshadriResult:
    r: int
    point: PointSpec
    value: Fraction
    attained: bool
    lower_bound: str
    witness: Optional[Witness] = None
    family: Optional[FamilyDescriptor] = None
    elliptic_witness: Optional[Witness] = None

    def to_dict(self) -> Dict:
        return {
            "r": self.r,
            "point": self.point.to_dict(),
            "value": str(self.value),
            "attained": self.attained,
            "lower_bound": self.lower_bound,
            "witness": self.witness.to_dict() if self.witness else None,
            "family": self.family.to_dict() if self.family else None,
            "elliptic_witness": self.elliptic_witness.to_dict() if self.elliptic_witness else None,
        }


@dataclass(frozen=True)
class ThresholdCertificate:
    r: int
    value: Fraction
    binding: DivisorClass  # class on X_{r+1}, last slot is the point x
    scanned: int
    minus_one_minimum: Optional[Fraction] = None

    @property
    def witness(self) -> Witness:
        return Witness(self.binding.restrict(self.r), self.binding.a[-1])


@dataclass(frozen=True)
class OracleResult:
    r: int
    value: Fraction
    witness: Witness
    scanned: int
    d_max: int


@dataclass
class FamilyBounds:
    members: List[Tuple[int, DivisorClass, Fraction]] = field(default_factory=list)

    @property
    def ratios(self) -> List[Fraction]:
        return [ratio for _, _, ratio in self.members]

    @property
    def strictly_decreasing(self) -> bool:
        return all(a > b for a, b in zip(self.ratios, self.ratios[1:]))

    @property
    def infimum(self) -> Fraction:
        # m/(m-1) = 1 + 1/(m-1): every member stays above 1 and the gap shrinks to 0
        for m, cls, q in self.members:
            if q - 1 != Fraction(1, m - 1):
                raise ValueError(f"{cls} has ratio {q}, off the m/(m-1) curve")
        return Fraction(1)


def _witness_key(d: int, mult: int, a: Sequence[int]) -> Tuple:
    """Lowest degree, then lowest multiplicity at x, then mass on low-indexed points."""
    return (d, mult, tuple(-x for x in a))


def _require_range(r: int) -> None:
    SurfaceModel(r).require_del_pezzo()


class SeshadriService:
    def __init__(self):
        self.atlas = CurveAtlasService()
        self.linear_systems = LinearSystemService()

    # threshold

    def nef_threshold_certificate(self, r: int, d_max_x9: int | None = None) -> ThresholdCertificate:
        _require_range(r)
        if r < MAX_DEL_PEZZO_POINTS:
            generators = [c for c in self.atlas.mori_generators(r + 1).classes if c.a[-1] >= 1]
            best = min(
                generators,
                key=lambda c: (
                    Fraction(deg_anticanonical(c.restrict(r)), c.a[-1]),
                    _witness_key(c.d, c.a[-1], c.a[:r]),
                ),
            )
            value = Fraction(deg_anticanonical(best.restrict(r)), best.a[-1])
            logger.debug("nef_threshold", r=r, value=str(value), binding=str(best))
            return ThresholdCertificate(r, value, best, scanned=len(generators))

        # X_9 has infinitely many (-1)-curves; -K_9 is nef with square 0 and
        # bounds t <= 1, every scanned (-1)-class allows t = 1 + 1/a_9 > 1
        if d_max_x9 is None:
            d_max_x9 = settings.X9_THRESHOLD_DMAX
        if d_max_x9 < 1:
            raise ValueError("d_max_x9 must be at least 1")
        scanned = [c for c in minus_one_classes_up_to_degree(r + 1, d_max_x9) if c.a[-1] >= 1]
        minus_one_min = min(Fraction(deg_anticanonical(c.restrict(r)), c.a[-1]) for c in scanned)
        elliptic = anticanonical(r + 1)
        value = min(minus_one_min, Fraction(deg_anticanonical(elliptic.restrict(r)), elliptic.a[-1]))
        return ThresholdCertificate(
            r, value, elliptic, scanned=len(scanned) + 1, minus_one_minimum=minus_one_min
        )

    def nef_threshold(self, r: int, p: PointSpec | None = None) -> Fraction:
        p = p or PointSpec.general()
        if not p.is_general:
            raise InvalidPointSpecError("The nef threshold models a general point only")
        return self.nef_threshold_certificate(r).value

    # constants and witnesses

    def _special_lower_bound(self, r: int) -> str:
        """Why epsilon >= 1 at a special point: -K very ample, or a smooth cubic through x."""
        if r <= 6:
            return "very_ample"
        if self.linear_systems.smooth_cubic_exists(r):
            return "smooth_cubic_through_point"
        raise UnsupportedSurfaceError(r, "no lower bound argument for special points")

    def seshadri_constant(self, r: int, p: PointSpec | None = None) -> SeshadriResult:
        p = p or PointSpec.general()
        _require_range(r)
        self.atlas.distinguished_curves_through(r, p)

        if p.kind == PointKind.ON_DISTINGUISHED:
            return SeshadriResult(
                r=r,
                point=p,
                value=Fraction(1),
                attained=True,
                lower_bound=self._special_lower_bound(r),
                witness=Witness(p.cls, 1),
            )
        if p.kind == PointKind.ANTICANONICAL_NODE:
            return SeshadriResult(
                r=r,
                point=p,
                value=Fraction(1, 2),
                attained=True,
                lower_bound="base_point_free_pencil",
                witness=Witness(anticanonical(r), 2),
            )
        if r == MAX_DEL_PEZZO_POINTS:
            return SeshadriResult(
                r=r,
                point=p,
                value=self.nef_threshold(r),
                attained=False,
                lower_bound="base_point_free_pencil",
                family=FamilyDescriptor(
                    first_ratios=tuple(self.family_ratio(m) for m in range(2, 6))
                ),
                elliptic_witness=Witness(anticanonical(r), 1),
            )
        certificate = self.nef_threshold_certificate(r)
        return SeshadriResult(
            r=r,
            point=p,
            value=certificate.value,
            attained=True,
            lower_bound="nef_threshold",
            witness=self.witness_rational_curve(r, p),
        )

    def witness_rational_curve(self, r: int, p: PointSpec | None = None) -> Witness:
        p = p or PointSpec.general()
        _require_range(r)
        if p.kind == PointKind.ON_DISTINGUISHED:
            witness = Witness(self.atlas.distinguished_curves_through(r, p)[0], 1)
        elif p.kind == PointKind.ANTICANONICAL_NODE:
            p.validate_shape(r)
            witness = Witness(anticanonical(r), 2)
        elif r == MAX_DEL_PEZZO_POINTS:
            raise NotAttainedError(
                "No rational curve attains the constant at a general point of X_8; "
                "use the limiting family (3m; m^8, m-1)"
            )
        else:
            witness = self.nef_threshold_certificate(r).witness
        assert witness.genus == 0, f"witness {witness} is not rational"
        return witness

    # oracle

    def oracle_search(self, r: int, p: PointSpec | None = None, d_max: int | None = None) -> OracleResult:
        """
        Infimum of -K.C / m over candidate curves C through x with
        multiplicity m, each an upper bound for the constant.
        """
        p = p or PointSpec.general()
        if d_max is None:
            d_max = settings.ORACLE_DMAX
        _require_range(r)
        if d_max < 1:
            raise ValueError("d_max must be at least 1")
        self.atlas.distinguished_curves_through(r, p)

        best: Optional[Tuple[Tuple, Witness]] = None
        scanned = 0

        def offer(cls: DivisorClass, mult: int) -> None:
            nonlocal best
            witness = Witness(cls, mult)
            key = (witness.ratio, _witness_key(cls.d, mult, cls.a))
            if best is None or key < best[0]:
                best = (key, witness)

        if p.kind == PointKind.ON_DISTINGUISHED:
            offer(p.cls, 1)
        if p.kind == PointKind.ANTICANONICAL_NODE:
            offer(anticanonical(r), 2)

        # a point on an exceptional curve has no plane image distinct from the x_i
        on_exceptional = p.kind == PointKind.ON_DISTINGUISHED and p.cls.is_exceptional
        if not on_exceptional:
            for d, shape in candidate_shapes(r, d_max):
                room = d * (d + 3) // 2 - sum(triangular(a) for a in shape)
                degree = 3 * d - sum(shape)
                square = d * d - sum(a * a for a in shape)
                m = 1
                while True:
                    minus_one = square - m * m == -1 and degree - m == 1
                    if room - triangular(m) < 0 and not minus_one:
                        break
                    scanned += 1
                    offer(DivisorClass(d, shape), m)
                    m += 1

        if best is None:
            raise UnsupportedSurfaceError(r, f"no candidate curve through x with d <= {d_max}")
        _, witness = best
        logger.debug("oracle_search", r=r, d_max=d_max, scanned=scanned, value=str(witness.ratio))
        return OracleResult(r, witness.ratio, witness, scanned, d_max)

    def brute_force_seshadri(self, r: int, p: PointSpec | None = None, d_max: int | None = None) -> Fraction:
        return self.oracle_search(r, p, d_max).value

    def oracle_report(self, r: int, p: PointSpec | None = None, d_max: int | None = None) -> Dict:
        p = p or PointSpec.general()
        oracle = self.oracle_search(r, p, d_max)
        report = {
            "r": r,
            "point": p.to_dict(),
            "d_max": oracle.d_max,
            "value": str(oracle.value),
            "witness": oracle.witness.to_dict(),
            "scanned": oracle.scanned,
            "threshold": None,
            "agrees": None,
        }
        if p.is_general:
            threshold = self.nef_threshold(r)
            report["threshold"] = str(threshold)
            report["agrees"] = oracle.value == threshold
        if p.is_general and r == MAX_DEL_PEZZO_POINTS:
            bounds = self.family_upper_bounds(settings.FAMILY_MAX_M)
            report["family"] = {
                "shape": FAMILY_SHAPE,
                "ratios": [str(q) for q in bounds.ratios],
                "strictly_decreasing": bounds.strictly_decreasing,
                "infimum": str(bounds.infimum),
            }
        return report

    # the r = 8 limiting family

    def limiting_family(self, m: int) -> DivisorClass:
        """(3m; m^8, m-1) on X_9: rational nodal curves with -K_9 . C = 1."""
        if m < 1:
            raise ValueError("the family is indexed by m >= 1")
        cls = DivisorClass(3 * m, (m,) * MAX_DEL_PEZZO_POINTS + (m - 1,))
        assert deg_anticanonical(cls) == 1
        return cls

    def family_ratio(self, m: int) -> Optional[Fraction]:
        """-K_8 . C / mult_x C for the m-th member; undefined at m = 1 (x is not on it)."""
        cls = self.limiting_family(m)
        mult = cls.a[-1]
        if mult == 0:
            logger.info("family_member_misses_point", m=m)
            return None
        return Fraction(deg_anticanonical(cls.restrict(MAX_DEL_PEZZO_POINTS)), mult)

    def family_upper_bounds(self, m_max: int) -> FamilyBounds:
        bounds = FamilyBounds()
        for m in range(2, m_max + 1):
            bounds.members.append((m, self.limiting_family(m), self.family_ratio(m)))
        return bounds

    # nodal anticanonical members

    def count_anticanonical_nodes(self, r: int = MAX_DEL_PEZZO_POINTS) -> int:
        """
        Singular members of the cubic pencil through eight general points:
        the Euler number of X_9 (the resolved pencil) minus that of its
        smooth elliptic fibers, i.e. one per nodal fiber.
        """
        if r != MAX_DEL_PEZZO_POINTS:
            raise UnsupportedSurfaceError(r, "nodal anticanonical members are counted on X_8")
        return SurfaceModel(r + 1).euler_number()

    def node_count_report(self, seeds: Sequence[int] = ()) -> Dict:
        pencil = PencilService()
        samples = [pencil.sample_pencil(seed).to_dict() for seed in seeds]
        count = self.count_anticanonical_nodes()
        return {
            "count": count,
            "euler_number": SurfaceModel(MAX_DEL_PEZZO_POINTS + 1).euler_number(),
            "samples": samples,
            "samples_agree": all(
                s["degree"] == count and s["squarefree_degree"] == count for s in samples
            ),
        }

    # the full case table

    def distinguished_representatives(self, r: int) -> List[DivisorClass]:
        """One (-1)-class per shape present on X_r."""
        reps = []
        for d, shape in sorted({(c.d, c.shape) for c in self.atlas.minus_one_classes(r)}):
            reps.append(DivisorClass.exceptional(1, r) if d == 0 else DivisorClass(d, shape))
        return reps

    def theorem_table(self) -> List[SeshadriResult]:
        rows = []
        for r in range(1, MAX_DEL_PEZZO_POINTS + 1):
            rows.append(self.seshadri_constant(r, PointSpec.general()))
            if r == MAX_DEL_PEZZO_POINTS:
                rows.append(self.seshadri_constant(r, PointSpec.node()))
                continue
            for cls in self.distinguished_representatives(r):
                rows.append(self.seshadri_constant(r, PointSpec.on_distinguished(cls)))
        return rows
