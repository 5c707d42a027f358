from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from src.bundles.models import IndeterminatePosition, Rank2Irrep
from src.bwb.spaces import SpaceTag, get_space
from src.core.exceptions import IncomparableTablesError


class TotalSpaceTag(str, Enum):
    XPLUS = "Xplus"
    Y = "Y"
    XMINUS = "Xminus"


class TotalSpace(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: TotalSpaceTag
    base: SpaceTag
    fiber: str
    # dual fiber as a Levi weight, when it is a rank-2 irreducible on the base
    fiber_dual: Optional[Rank2Irrep] = None
    ambient: Optional[TotalSpaceTag] = None
    cutting_line_exponent: Optional[int] = None
    section_fiber_degree: Optional[int] = None

    @model_validator(mode="after")
    def _check(self) -> "TotalSpace":
        if self.tag is TotalSpaceTag.XMINUS:
            if self.ambient is not TotalSpaceTag.Y or self.cutting_line_exponent is None or self.section_fiber_degree is None:
                raise ValueError("Xminus is a divisor in Y cut out by a section of a line bundle")
        return self

    @property
    def base_dimension(self) -> int:
        return get_space(self.base).dimension


XPLUS = TotalSpace(
    tag=TotalSpaceTag.XPLUS,
    base=SpaceTag.LGR,
    fiber="S (x) wedge^2 S",
    fiber_dual=Rank2Irrep(a=2, b=1),
)

Y = TotalSpace(
    tag=TotalSpaceTag.Y,
    base=SpaceTag.PV,
    fiber="(V/L) (x) L^2",
)

XMINUS = TotalSpace(
    tag=TotalSpaceTag.XMINUS,
    base=SpaceTag.PV,
    fiber="(L^perp/L) (x) L^2",
    ambient=TotalSpaceTag.Y,
    cutting_line_exponent=1,
    section_fiber_degree=1,
)

TOTAL_SPACES: Dict[TotalSpaceTag, TotalSpace] = {t.tag: t for t in (XPLUS, Y, XMINUS)}


class GradedPosition(BaseModel):
    model_config = ConfigDict(frozen=True)

    fiber_degree: int
    detail: IndeterminatePosition

    def __str__(self) -> str:
        return f"fiber degree {self.fiber_degree}: {self.detail}"


class GradedTable(BaseModel):
    """dim H^i in fiber degree n, for min_degree <= n <= cutoff.

    Rows listed in ``indeterminate`` hold zeros; their Euler characteristic
    in ``euler`` is still exact.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    space: TotalSpaceTag
    cutoff: int = Field(ge=0)
    min_degree: int = Field(default=0, le=0)
    dimensions: np.ndarray
    euler: Tuple[int, ...]
    indeterminate: Tuple[GradedPosition, ...] = ()
    # (fiber degree, index of the filtration piece whose connecting map fired)
    cup_firings: Tuple[Tuple[int, int], ...] = ()

    @field_validator("dimensions", mode="before")
    @classmethod
    def _as_array(cls, value):
        array = np.array(value, dtype=np.int64)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _check(self) -> "GradedTable":
        rows = self.cutoff - self.min_degree + 1
        width = TOTAL_SPACES[self.space].base_dimension + 1
        if self.dimensions.shape != (rows, width):
            raise ValueError(f"dimension grid has shape {self.dimensions.shape}, expected {(rows, width)}")
        if (self.dimensions < 0).any():
            raise ValueError("dimensions must be nonnegative")
        if len(self.euler) != rows:
            raise ValueError(f"need one Euler characteristic per fiber degree, got {len(self.euler)}")
        return self

    @field_serializer("dimensions")
    def _serialize_dimensions(self, value: np.ndarray) -> List[List[int]]:
        return value.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedTable):
            return NotImplemented
        return (
            self.space == other.space
            and self.cutoff == other.cutoff
            and self.min_degree == other.min_degree
            and np.array_equal(self.dimensions, other.dimensions)
            and self.euler == other.euler
            and self.indeterminate == other.indeterminate
            and self.cup_firings == other.cup_firings
        )

    @property
    def degrees(self) -> range:
        return range(self.min_degree, self.cutoff + 1)

    def row(self, fiber_degree: int) -> Tuple[int, ...]:
        if fiber_degree not in self.degrees:
            raise IndexError(f"fiber degree {fiber_degree} outside [{self.min_degree}, {self.cutoff}]")
        return tuple(int(d) for d in self.dimensions[fiber_degree - self.min_degree])

    def dim(self, fiber_degree: int, degree: int) -> int:
        return self.row(fiber_degree)[degree]

    def h0_sequence(self, low: int = 0, high: Optional[int] = None) -> Tuple[int, ...]:
        high = self.cutoff if high is None else high
        return tuple(self.dim(n, 0) for n in range(low, high + 1))

    def total(self, degree: int) -> int:
        return int(self.dimensions[:, degree].sum())

    @property
    def is_resolved(self) -> bool:
        return not self.indeterminate

    def higher_nonzero(self) -> List[Tuple[int, int, int]]:
        """(fiber degree, cohomological degree, dimension) for every nonzero H^(>0) entry"""
        out = []
        for n in self.degrees:
            for i, d in enumerate(self.row(n)):
                if i > 0 and d:
                    out.append((n, i, d))
        return out

    @property
    def higher_vanishes(self) -> bool:
        return self.is_resolved and not self.higher_nonzero()

    def negative_h0(self) -> List[Tuple[int, int]]:
        return [(n, self.dim(n, 0)) for n in range(self.min_degree, 0) if self.dim(n, 0)]

    def check_comparable(self, other: "GradedTable") -> None:
        if self.cutoff != other.cutoff:
            raise IncomparableTablesError(f"cutoffs differ: {self.cutoff} vs {other.cutoff}")

    def summary(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "space": self.space.value,
            "cutoff": self.cutoff,
            "min_degree": self.min_degree,
            "h0": [self.dim(n, 0) for n in self.degrees],
            "higher_nonzero": [list(t) for t in self.higher_nonzero()],
        }
        if self.indeterminate:
            out["indeterminate"] = [str(p) for p in self.indeterminate]
        if self.cup_firings:
            out["cup_firings"] = [list(f) for f in self.cup_firings]
        return out


def assemble_table(space: TotalSpaceTag, cutoff: int, min_degree: int, rows: List[Tuple[int, ...]],
                   euler: List[int], indeterminate=(), cup_firings=()) -> GradedTable:
    return GradedTable(
        space=space,
        cutoff=cutoff,
        min_degree=min_degree,
        dimensions=rows,
        euler=tuple(euler),
        indeterminate=tuple(indeterminate),
        cup_firings=tuple(cup_firings),
    )
