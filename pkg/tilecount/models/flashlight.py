# Standard Library Imports

# Third Party Imports
from pydantic import BaseModel, ConfigDict, Field


# Local App Imports


class FlashlightParams(BaseModel):
    """
    Parameters of the flashlight region F_{x,y,z,t}. y = 0 is admitted for experiments only.
    """

    model_config = ConfigDict(frozen=True)

    x: int = Field(ge=0)
    y: int = Field(ge=0)
    z: int = Field(ge=0)
    t: int = Field(ge=0)

    @property
    def experimental(self) -> bool:
        return self.y == 0

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.x, self.y, self.z, self.t

    def __str__(self):
        return f"F({self.x},{self.y},{self.z},{self.t})"


def flashlight(x: int, y: int, z: int, t: int) -> FlashlightParams:
    return FlashlightParams(x=x, y=y, z=z, t=t)
