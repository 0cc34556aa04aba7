# Standard Library Imports
from typing import Literal

# Third Party Imports
from pydantic import BaseModel, ConfigDict, field_validator


# Local App Imports


class Partition(BaseModel):
    """
    Weakly decreasing sequence of positive parts, stored without trailing zeros.
    """

    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...] = ()

    @field_validator("parts")
    @classmethod
    def check_parts(cls, parts: tuple[int, ...]) -> tuple[int, ...]:
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        return parts

    @property
    def shifted(self) -> bool:
        return False

    def rows(self) -> int:
        return len(self.parts)

    def cols(self) -> int:
        return self.parts[0] if self.parts else 0

    def size(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


class StrictPartition(Partition):
    """
    Strictly decreasing sequence of positive parts; row i of its shifted diagram starts in column i.
    """

    @field_validator("parts")
    @classmethod
    def check_strict(cls, parts: tuple[int, ...]) -> tuple[int, ...]:
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be strictly decreasing, got {parts}")
        return parts

    @property
    def shifted(self) -> bool:
        return True


ShapeTag = Literal[
    "rectangle",
    "staircase",
    "shifted_staircase",
    "shifted_trapezoid",
    "shifted_double_staircase",
    "arithmetic_progression",
    "custom",
]


class ShapeFamily(BaseModel):
    """
    Provenance tag of a shape: the family name and its integer parameters.
    rectangle(a,b), staircase(a,b), shifted_staircase(n), shifted_trapezoid(n,k),
    shifted_double_staircase(n,k), arithmetic_progression(M,d,l), custom(p1,p2,...).
    """

    model_config = ConfigDict(frozen=True)

    tag: ShapeTag
    params: tuple[int, ...] = ()
