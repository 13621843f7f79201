"""
Picard lattice of the blow-up X_r of the plane at r points.

A class is stored as (d; a_1, ..., a_r) meaning dH - sum a_i E_i, so strict
transforms of plane curves have a_i >= 0 and the exceptional curve E_i is
(0; 0, ..., -1, ..., 0). The intersection form is diag(1, -1, ..., -1).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from app.core.exceptions import (
    DimensionMismatchError,
    InvalidPointSpecError,
    UnsupportedSurfaceError,
)

MAX_DEL_PEZZO_POINTS = 8
AUXILIARY_POINTS = 9


@dataclass(frozen=True, order=False)
class DivisorClass:
    d: int
    a: Tuple[int, ...] = ()

    def __post_init__(self):
        # accept any iterable of ints for a, store an immutable tuple
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))

    @property
    def r(self) -> int:
        return len(self.a)

    @classmethod
    def line(cls, r: int) -> "DivisorClass":
        return cls(1, (0,) * r)

    @classmethod
    def exceptional(cls, i: int, r: int) -> "DivisorClass":
        """E_i with 1-based index i."""
        if not 1 <= i <= r:
            raise ValueError(f"exceptional index {i} outside 1..{r}")
        a = [0] * r
        a[i - 1] = -1
        return cls(0, tuple(a))

    @classmethod
    def parse(cls, text: str, r: int | None = None) -> "DivisorClass":
        """Parse the class-spec syntax ``d:a1,a2,...``; missing trailing slots are zero."""
        head, sep, tail = text.strip().partition(":")
        try:
            d = int(head)
            a = [int(x) for x in tail.split(",") if x.strip()] if sep else []
        except ValueError:
            raise InvalidPointSpecError(f"Malformed class spec '{text}', expected d:a1,a2,...")
        if r is not None:
            if len(a) > r:
                raise InvalidPointSpecError(f"Class spec '{text}' has {len(a)} slots but r = {r}")
            a += [0] * (r - len(a))
        return cls(d, tuple(a))

    def spec(self) -> str:
        return f"{self.d}:" + ",".join(str(x) for x in self.a)

    def extend(self, *mults: int) -> "DivisorClass":
        """Append multiplicities at further blown-up points."""
        return DivisorClass(self.d, self.a + tuple(mults))

    def restrict(self, r: int) -> "DivisorClass":
        return DivisorClass(self.d, self.a[:r])

    def permuted(self, order: Sequence[int]) -> "DivisorClass":
        return DivisorClass(self.d, tuple(self.a[i] for i in order))

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(sorted(self.a, reverse=True))

    @property
    def is_exceptional(self) -> bool:
        return self.d == 0 and sorted(self.a) == [-1] + [0] * (self.r - 1)

    def canonical_key(self) -> Tuple:
        """Ordering key: degree, then the multiplicity shape, then the slots."""
        return (self.d, self.shape, self.a)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_lattice(self, other)
        return DivisorClass(self.d + other.d, tuple(x + y for x, y in zip(self.a, other.a)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_lattice(self, other)
        return DivisorClass(self.d - other.d, tuple(x - y for x, y in zip(self.a, other.a)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.d, tuple(-x for x in self.a))

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(k * self.d, tuple(k * x for x in self.a))

    __rmul__ = __mul__

    def to_vector(self) -> List[int]:
        return [self.d, *self.a]

    def __str__(self) -> str:
        return f"({self.d}; {', '.join(str(x) for x in self.a)})" if self.a else f"({self.d})"


class PositionAssumption(str, Enum):
    GENERAL = "general"
    VERY_GENERAL = "very-general"


@dataclass(frozen=True)
class SurfaceModel:
    """The blow-up X_r together with the position assumption on its points."""

    r: int
    assumption: PositionAssumption = PositionAssumption.GENERAL

    def __post_init__(self):
        if self.r < 0:
            raise UnsupportedSurfaceError(self.r, "point count must be nonnegative")

    @property
    def is_del_pezzo(self) -> bool:
        return self.r <= MAX_DEL_PEZZO_POINTS

    @property
    def very_general(self) -> bool:
        return self.assumption == PositionAssumption.VERY_GENERAL

    def require_del_pezzo(self) -> None:
        if not self.is_del_pezzo:
            raise UnsupportedSurfaceError(self.r, f"del Pezzo operations need r <= {MAX_DEL_PEZZO_POINTS}")

    def anticanonical(self) -> DivisorClass:
        return anticanonical(self)

    def euler_number(self) -> int:
        # e(P^2) = 3, each blow-up adds one
        return 3 + self.r


def _check_same_lattice(c1: DivisorClass, c2: DivisorClass) -> None:
    if c1.r != c2.r:
        raise DimensionMismatchError(c1.r, c2.r)


def intersect(c1: DivisorClass, c2: DivisorClass) -> int:
    _check_same_lattice(c1, c2)
    return c1.d * c2.d - sum(x * y for x, y in zip(c1.a, c2.a))


def self_intersection(c: DivisorClass) -> int:
    return intersect(c, c)


def anticanonical(s: SurfaceModel | int) -> DivisorClass:
    r = s.r if isinstance(s, SurfaceModel) else int(s)
    return DivisorClass(3, (1,) * r)


def canonical(s: SurfaceModel | int) -> DivisorClass:
    return -anticanonical(s)


def deg_anticanonical(c: DivisorClass) -> int:
    """-K . C = 3d - sum a_i."""
    return 3 * c.d - sum(c.a)


def arithmetic_genus(c: DivisorClass) -> int:
    """Adjunction: p_a = (C^2 + C.K)/2 + 1."""
    twice = self_intersection(c) - deg_anticanonical(c)
    assert twice % 2 == 0, f"odd adjunction numerator for {c}"
    return twice // 2 + 1


def witness_genus(c: DivisorClass, mult_at_x: int) -> int:
    """Genus left after an ordinary point of multiplicity ``mult_at_x`` at x."""
    return arithmetic_genus(c) - mult_at_x * (mult_at_x - 1) // 2


def gram_matrix(r: int) -> np.ndarray:
    return np.diag([1] + [-1] * r).astype(np.int64)


def intersection_matrix(rows: Iterable[DivisorClass], cols: Iterable[DivisorClass]) -> np.ndarray:
    """All pairwise intersections between two lists of classes on one lattice."""
    rows, cols = list(rows), list(cols)
    if not rows or not cols:
        return np.zeros((len(rows), len(cols)), dtype=np.int64)
    r = rows[0].r
    for c in rows + cols:
        if c.r != r:
            raise DimensionMismatchError(r, c.r)
    left = np.array([c.to_vector() for c in rows], dtype=np.int64)
    right = np.array([c.to_vector() for c in cols], dtype=np.int64)
    return left @ gram_matrix(r) @ right.T
