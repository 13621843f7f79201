from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from app.core.exceptions import InvalidPointSpecError
from app.models.picard import DivisorClass


class PointKind(str, Enum):
    GENERAL = "general"
    ON_DISTINGUISHED = "distinguished"
    ANTICANONICAL_NODE = "node"


@dataclass(frozen=True)
class PointSpec:
    """Symbolic position of the query point x on X_r."""

    kind: PointKind = PointKind.GENERAL
    cls: Optional[DivisorClass] = None

    @classmethod
    def general(cls) -> "PointSpec":
        return cls(PointKind.GENERAL)

    @classmethod
    def on_distinguished(cls, curve: DivisorClass) -> "PointSpec":
        return cls(PointKind.ON_DISTINGUISHED, curve)

    @classmethod
    def node(cls) -> "PointSpec":
        return cls(PointKind.ANTICANONICAL_NODE)

    @classmethod
    def parse(cls, text: str, r: int) -> "PointSpec":
        """Parse ``general``, ``node`` or ``distinguished:<d:a1,a2,...>``."""
        text = text.strip()
        if text == PointKind.GENERAL.value:
            return cls.general()
        if text == PointKind.ANTICANONICAL_NODE.value:
            return cls.node()
        prefix = PointKind.ON_DISTINGUISHED.value + ":"
        if text.startswith(prefix):
            return cls.on_distinguished(DivisorClass.parse(text[len(prefix):], r))
        raise InvalidPointSpecError(
            f"Unknown point spec '{text}', expected general | distinguished:<d:a1,...> | node"
        )

    @property
    def is_general(self) -> bool:
        return self.kind == PointKind.GENERAL

    def permuted(self, order) -> "PointSpec":
        if self.cls is None:
            return self
        return PointSpec(self.kind, self.cls.permuted(order))

    def validate_shape(self, r: int) -> None:
        """Structural checks; (-1)-class membership is checked by the curve atlas."""
        if self.kind == PointKind.ON_DISTINGUISHED:
            if self.cls is None:
                raise InvalidPointSpecError("A distinguished point needs its curve class")
            if r > 7:
                raise InvalidPointSpecError(
                    f"Distinguished points are defined for r <= 7, got r = {r}"
                )
            if self.cls.r != r:
                raise InvalidPointSpecError(
                    f"Curve class {self.cls} has {self.cls.r} slots but r = {r}"
                )
        elif self.kind == PointKind.ANTICANONICAL_NODE and r != 8:
            raise InvalidPointSpecError(f"Anticanonical nodes exist only for r = 8, got r = {r}")

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind.value}
        if self.cls is not None:
            out["class"] = self.cls.spec()
        return out
