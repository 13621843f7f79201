"""
Negative curves of X_r: the (-1)-classes, the Mori cone generators used for
nef tests, the distinguished curve through a special point, and the pool of
candidate curve classes scanned by the brute-force oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

import structlog

from app.core.exceptions import InvalidPointSpecError
from app.models.picard import (
    MAX_DEL_PEZZO_POINTS,
    DivisorClass,
    SurfaceModel,
    arithmetic_genus,
    deg_anticanonical,
    self_intersection,
)
from app.models.points import PointKind, PointSpec
from app.utils.lattice_search import (
    Shape,
    orbit_size,
    shapes_with_sums,
    shapes_within_budget,
    slot_orders,
)

logger = structlog.get_logger(__name__)

# Degree and multiplicity bounds for (-1)-classes of X_r, r <= 8
MINUS_ONE_MAX_DEGREE = 6
MINUS_ONE_MULT_RANGE = (-1, 3)

# The seven multiplicity shapes of (-1)-classes on X_8, padded with zeros for smaller r
MINUS_ONE_FAMILIES: Tuple[Tuple[int, Tuple[int, ...]], ...] = (
    (0, (-1,)),
    (1, (1, 1)),
    (2, (1, 1, 1, 1, 1)),
    (3, (2, 1, 1, 1, 1, 1, 1)),
    (4, (2, 2, 2, 1, 1, 1, 1, 1)),
    (5, (2, 2, 2, 2, 2, 2, 1, 1)),
    (6, (3, 2, 2, 2, 2, 2, 2, 2)),
)


@dataclass(frozen=True)
class MinusOneClass:
    cls: DivisorClass

    def __post_init__(self):
        if self_intersection(self.cls) != -1 or deg_anticanonical(self.cls) != 1:
            raise ValueError(f"{self.cls} is not a (-1)-class")


@dataclass(frozen=True)
class MoriGenerators:
    r: int
    classes: List[DivisorClass] = field(default_factory=list)


def _require_enumerable(r: int) -> None:
    # X_9 and beyond carry infinitely many (-1)-curves
    SurfaceModel(r).require_del_pezzo()


def minus_one_shapes(r: int, d: int, hi: int) -> Iterator[Shape]:
    """Shapes solving C^2 = -1, -K.C = 1 in degree d; d = 0 only yields E_i."""
    lo = -1 if d == 0 else 0
    for shape in shapes_with_sums(r, 3 * d - 1, d * d + 1, lo, hi):
        if d == 0 and sorted(shape) != [-1] + [0] * (r - 1):
            continue
        yield shape


@lru_cache(maxsize=None)
def _minus_one_classes(r: int) -> Tuple[DivisorClass, ...]:
    _, hi = MINUS_ONE_MULT_RANGE
    found = set()
    for d in range(0, MINUS_ONE_MAX_DEGREE + 1):
        for shape in minus_one_shapes(r, d, hi):
            for order in slot_orders(shape):
                found.add(DivisorClass(d, order))
    classes = tuple(sorted(found, key=DivisorClass.canonical_key))
    logger.debug("minus_one_classes_enumerated", r=r, count=len(classes))
    return classes


@lru_cache(maxsize=None)
def minus_one_classes_up_to_degree(r: int, d_max: int) -> Tuple[DivisorClass, ...]:
    """
    Bounded scan of (-1)-classes on any X_r, including X_9 where the full
    list is infinite. Strict transforms only (d >= 1) plus the E_i.
    """
    found = [DivisorClass.exceptional(i, r) for i in range(1, r + 1)]
    for d in range(1, d_max + 1):
        for shape in minus_one_shapes(r, d, d):
            found.extend(DivisorClass(d, order) for order in slot_orders(shape))
    return tuple(sorted(found, key=DivisorClass.canonical_key))


def family_counts(r: int) -> Dict[str, int]:
    """Closed-form orbit sizes of the seven (-1)-class shapes on X_r, keyed by degree."""
    counts: Dict[str, int] = {}
    for d, core in MINUS_ONE_FAMILIES:
        if len(core) > r:
            continue
        counts[str(d)] = orbit_size(core + (0,) * (r - len(core)))
    return counts


def passes_bezout_filters(d: int, shape: Shape) -> bool:
    """
    Multiplicity tests an irreducible degree-d curve must pass at points in
    general position: against the line through two points, the conic through
    five and the cubic through seven double at one of them.
    """
    s = sorted(shape, reverse=True)
    if len(s) >= 2 and s[0] + s[1] > d:
        return False
    if len(s) >= 5 and sum(s[:5]) > 2 * d:
        return False
    if len(s) >= 7 and sum(s[:7]) + s[0] > 3 * d:
        return False
    return True


def candidate_shapes(r: int, d_max: int) -> Iterator[Tuple[int, Shape]]:
    """
    (degree, shape) pairs of candidate irreducible curves at general points:
    nonempty by the dimension count and Bezout-compatible, or a (-1)-shape.
    """
    minus_one = set()
    if r <= MAX_DEL_PEZZO_POINTS:
        minus_one = {(c.d, c.shape) for c in _minus_one_classes(r) if 1 <= c.d <= d_max}
    for d in range(1, d_max + 1):
        budget = d * (d + 3) // 2
        for shape in shapes_within_budget(r, d, budget):
            if (d, shape) in minus_one or passes_bezout_filters(d, shape):
                yield d, shape


class CurveAtlasService:
    def enumerate_minus_one_classes(self, r: int) -> List[MinusOneClass]:
        """All (-1)-classes of X_r in canonical order."""
        _require_enumerable(r)
        return [MinusOneClass(c) for c in _minus_one_classes(r)]

    def minus_one_classes(self, r: int) -> List[DivisorClass]:
        _require_enumerable(r)
        return list(_minus_one_classes(r))

    def mori_generators(self, r: int) -> MoriGenerators:
        _require_enumerable(r)
        if r == 0:
            return MoriGenerators(0, [DivisorClass.line(0)])
        if r == 1:
            return MoriGenerators(1, [DivisorClass.exceptional(1, 1), DivisorClass(1, (1,))])
        return MoriGenerators(r, list(_minus_one_classes(r)))

    def distinguished_curves_through(self, r: int, p: PointSpec) -> List[DivisorClass]:
        p.validate_shape(r)
        if p.kind != PointKind.ON_DISTINGUISHED:
            return []
        if p.cls not in set(_minus_one_classes(r)):
            raise InvalidPointSpecError(f"{p.cls} is not a (-1)-class of X_{r}")
        return [p.cls]

    def effective_candidates(self, r: int, d_max: int) -> List[DivisorClass]:
        """Every candidate class with 1 <= d <= d_max, plus the exceptional curves."""
        if d_max < 1:
            raise ValueError("d_max must be at least 1")
        classes = [DivisorClass.exceptional(i, r) for i in range(1, r + 1)]
        for d, shape in candidate_shapes(r, d_max):
            classes.extend(DivisorClass(d, order) for order in slot_orders(shape))
        return sorted(set(classes), key=DivisorClass.canonical_key)

    def summary(self, r: int) -> Dict:
        """Counts and lattice checks of the (-1)-classes, as reported by the CLI."""
        classes = self.minus_one_classes(r)
        return {
            "r": r,
            "count": len(classes),
            "family_counts": family_counts(r),
            "all_rational": all(arithmetic_genus(c) == 0 for c in classes),
            "classes": [c.spec() for c in classes],
        }
