# Standard Library Imports

# Third Party Imports
from pydantic import BaseModel, ConfigDict, model_validator

# Local App Imports
from tilecount.models.shape import Partition


class PlanePartition(BaseModel):
    """
    Filling of a (shifted) diagram with entries in [0, bound], weakly decreasing along rows and down columns.
    Row i of entries has shape.parts[i] values. For a shifted shape, entries[i][k] sits in column i+k (0-based),
    so the cell below entries[i][k+1] is entries[i+1][k].
    """

    model_config = ConfigDict(frozen=True)

    shape: Partition
    bound: int
    entries: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_filling(self):
        parts = self.shape.parts
        if self.bound < 0:
            raise ValueError(f"bound must be nonnegative, got {self.bound}")
        if tuple(len(row) for row in self.entries) != parts:
            raise ValueError(f"row lengths {[len(r) for r in self.entries]} do not match shape {parts}")
        for row in self.entries:
            if any(e < 0 or e > self.bound for e in row):
                raise ValueError(f"entries must lie in [0, {self.bound}], got {row}")
            if any(a < b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {row} is not weakly decreasing")
        offset = 1 if self.shape.shifted else 0
        for upper, lower in zip(self.entries, self.entries[1:]):
            for k, value in enumerate(lower):
                if value > upper[k + offset]:
                    raise ValueError(f"column rule fails between rows {upper} and {lower}")
        return self

    def entry(self, i: int, j: int) -> int:
        """
        Entry in row i, column j (1-based, columns of the shifted diagram for shifted shapes).
        """
        start = i if self.shape.shifted else 1
        return self.entries[i - 1][j - start]

    def size(self) -> int:
        return sum(sum(row) for row in self.entries)
