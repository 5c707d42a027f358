from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.bwb.spaces import SpaceTag, get_space
from src.core.exceptions import InvalidParameterBoxError
from src.weights.models import AffineForm, AffineWeight, Weight
from src.weights.root_system import weyl_dim


class IrreducibleSummand(BaseModel):
    """Irreducible module of the full group (GL4 or Sp4) with a multiplicity"""
    model_config = ConfigDict(frozen=True)

    weight: Weight
    multiplicity: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check_dominant(self) -> "IrreducibleSummand":
        if not self.weight.is_dominant():
            raise ValueError(f"cohomology weight {self.weight} is not dominant for {self.weight.root_system}")
        return self

    @property
    def dimension(self) -> int:
        return self.multiplicity * weyl_dim(self.weight.root_system, self.weight)


class CohomologyTable(BaseModel):
    """Cohomology of a homogeneous bundle on one of the closed bases.

    ``entries`` carries labelled irreducibles per degree. Routes that only
    know dimensions (the hyperplane route on LGr) fill ``unlabeled`` instead.
    """
    model_config = ConfigDict(frozen=True)

    space: SpaceTag
    entries: Dict[int, Tuple[IrreducibleSummand, ...]] = Field(default_factory=dict)
    unlabeled: Dict[int, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_degrees(self) -> "CohomologyTable":
        top = get_space(self.space).dimension
        for degree in list(self.entries) + list(self.unlabeled):
            if not 0 <= degree <= top:
                raise ValueError(f"degree {degree} outside [0, {top}] for {self.space.value}")
        if any(d < 0 for d in self.unlabeled.values()):
            raise ValueError("dimensions must be nonnegative")
        return self

    @classmethod
    def empty(cls, space: SpaceTag) -> "CohomologyTable":
        return cls(space=space)

    @classmethod
    def from_dimensions(cls, space: SpaceTag, dimensions) -> "CohomologyTable":
        return cls(space=space, unlabeled={i: int(d) for i, d in enumerate(dimensions) if d})

    @property
    def top_degree(self) -> int:
        return get_space(self.space).dimension

    def total_dim(self, degree: int) -> int:
        labelled = sum(s.dimension for s in self.entries.get(degree, ()))
        return labelled + self.unlabeled.get(degree, 0)

    def dimensions(self) -> Tuple[int, ...]:
        return tuple(self.total_dim(i) for i in range(self.top_degree + 1))

    def nonzero_degrees(self) -> Tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.dimensions()) if d)

    @property
    def is_zero(self) -> bool:
        return not self.nonzero_degrees()

    @property
    def higher_vanishes(self) -> bool:
        return all(i == 0 for i in self.nonzero_degrees())

    @property
    def is_concentrated(self) -> bool:
        return len(self.nonzero_degrees()) <= 1

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self.dimensions()))

    def summary(self) -> Dict[str, object]:
        """Compact JSON-ready form used in reports"""
        out: Dict[str, object] = {"space": self.space.value, "dimensions": list(self.dimensions())}
        if self.entries:
            out["modules"] = {
                str(i): [[list(s.weight.entries), s.multiplicity] for s in summands]
                for i, summands in sorted(self.entries.items())
            }
        return out


class FamilyClaim(str, Enum):
    NO_HIGHER_COHOMOLOGY = "no-higher-cohomology"
    ALL_ZERO = "all-zero"

    def holds(self, table: CohomologyTable) -> bool:
        if self is FamilyClaim.ALL_ZERO:
            return table.is_zero
        return table.higher_vanishes


class ParameterRange(BaseModel):
    """Inclusive range ``low <= name <= high``; ``low`` may depend on earlier parameters"""
    model_config = ConfigDict(frozen=True)

    name: str
    low: AffineForm
    high: int

    @field_validator("low", mode="before")
    @classmethod
    def _lift(cls, value):
        return AffineForm.lift(value)

    @property
    def is_constant(self) -> bool:
        return not self.low.parameters

    @property
    def extent(self) -> Optional[int]:
        """Number of values for constant bounds, None when the lower bound is dependent"""
        if not self.is_constant:
            return None
        return self.high - self.low.constant + 1

    def __str__(self) -> str:
        return f"{self.name} in [{self.low}, {self.high}]"


class ParameterBox(BaseModel):
    model_config = ConfigDict(frozen=True)

    ranges: Tuple[ParameterRange, ...]

    @model_validator(mode="after")
    def _check_order(self) -> "ParameterBox":
        seen: List[str] = []
        for r in self.ranges:
            if r.name in seen:
                raise ValueError(f"parameter {r.name!r} declared twice")
            unknown = [p for p in r.low.parameters if p not in seen]
            if unknown:
                raise ValueError(f"lower bound of {r.name!r} depends on undeclared parameters {unknown}")
            seen.append(r.name)
        return self

    @classmethod
    def of(cls, *ranges: Tuple[str, object, int]) -> "ParameterBox":
        return cls(ranges=tuple(ParameterRange(name=n, low=lo, high=hi) for n, lo, hi in ranges))

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(r.name for r in self.ranges)

    def check(self) -> None:
        for r in self.ranges:
            extent = r.extent
            if extent is not None and extent < 0:
                raise InvalidParameterBoxError(f"range {r} has negative extent {extent}")

    def range_of(self, name: str) -> ParameterRange:
        for r in self.ranges:
            if r.name == name:
                return r
        raise KeyError(name)

    def points(self) -> Iterator[Dict[str, int]]:
        """Lattice points in lexicographic order of the declared parameters"""
        def walk(index: int, point: Dict[str, int]) -> Iterator[Dict[str, int]]:
            if index == len(self.ranges):
                yield dict(point)
                return
            r = self.ranges[index]
            for value in range(r.low.evaluate(point), r.high + 1):
                point[r.name] = value
                yield from walk(index + 1, point)
            point.pop(r.name, None)

        self.check()
        yield from walk(0, {})

    def is_empty(self) -> bool:
        return next(self.points(), None) is None

    def describe(self) -> Dict[str, List[object]]:
        return {r.name: [str(r.low), r.high] for r in self.ranges}


class Counterexample(BaseModel):
    model_config = ConfigDict(frozen=True)

    point: Dict[str, int]
    weight: Weight
    table: CohomologyTable


class FamilyCertificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    space: SpaceTag
    weight: AffineWeight
    box: ParameterBox
    claim: FamilyClaim
    points_checked: int
    counterexamples: Tuple[Counterexample, ...] = ()
    stabilized: bool = False

    @property
    def certified(self) -> bool:
        return not self.counterexamples

    @property
    def verdict(self) -> str:
        return "certified" if self.certified else "counterexamples"

    def summary(self) -> Dict[str, object]:
        return {
            "space": self.space.value,
            "weight": str(self.weight),
            "box": self.box.describe(),
            "claim": self.claim.value,
            "points_checked": self.points_checked,
            "verdict": self.verdict,
            "stabilized": self.stabilized,
        }
