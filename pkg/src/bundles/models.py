from collections import Counter
from enum import Enum
from typing import Dict, Iterator, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.bwb.spaces import SpaceTag

# Ext^1(L^q <s_q>, L^p <s_p>) = H^1(X-, L^(p-q)) in fiber degree s_q - s_p; only (3, 1) is nonzero
EXTENSION_RECEPTACLE = (3, 1)


class Rank2Irrep(BaseModel):
    """Sigma^(a,b) of a rank-2 bundle (S^dual on Gr24 / LGr)"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["rank2"] = "rank2"
    a: int
    b: int

    @model_validator(mode="after")
    def _check(self) -> "Rank2Irrep":
        if self.a < self.b:
            raise ValueError(f"Rank2Irrep needs a >= b, got ({self.a},{self.b})")
        return self

    @classmethod
    def of(cls, a: int, b: int) -> "Rank2Irrep":
        return cls(a=a, b=b)

    @classmethod
    def line(cls, exponent: int) -> "Rank2Irrep":
        """(wedge^2 S^dual)^exponent"""
        return cls(a=exponent, b=exponent)

    @property
    def rank(self) -> int:
        return self.a - self.b + 1

    def dual(self) -> "Rank2Irrep":
        return Rank2Irrep(a=-self.b, b=-self.a)

    def twist(self, exponent: int) -> "Rank2Irrep":
        return Rank2Irrep(a=self.a + exponent, b=self.b + exponent)

    def sort_key(self) -> Tuple[int, int, int]:
        return (0, self.a, self.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


class LinePower(BaseModel):
    """L^exponent on PV (and its pullbacks to Y, X-)"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["line"] = "line"
    exponent: int

    @property
    def rank(self) -> int:
        return 1

    def dual(self) -> "LinePower":
        return LinePower(exponent=-self.exponent)

    def sort_key(self) -> Tuple[int, int, int]:
        return (1, self.exponent, 0)

    def __str__(self) -> str:
        return f"L^{self.exponent}"


Term = Union[Rank2Irrep, LinePower]


class BundleExpression(BaseModel):
    """Direct sum of irreducible homogeneous bundles with multiplicities"""
    model_config = ConfigDict(frozen=True)

    space: SpaceTag
    terms: Tuple[Tuple[Term, int], ...] = ()

    @field_validator("terms", mode="before")
    @classmethod
    def _canonical(cls, value):
        merged: Dict[Term, int] = {}
        order: List[Term] = []
        for term, multiplicity in value:
            if isinstance(term, dict):
                term = Rank2Irrep(**term) if term.get("kind", "rank2") == "rank2" else LinePower(**term)
            if term not in merged:
                merged[term] = 0
                order.append(term)
            merged[term] += int(multiplicity)
        return tuple(sorted(((t, merged[t]) for t in order), key=lambda tm: tm[0].sort_key()))

    @model_validator(mode="after")
    def _check(self) -> "BundleExpression":
        for term, multiplicity in self.terms:
            if multiplicity < 1:
                raise ValueError(f"multiplicity of {term} must be positive, got {multiplicity}")
        return self

    @classmethod
    def of(cls, space: SpaceTag, *terms: Term) -> "BundleExpression":
        return cls(space=space, terms=tuple(Counter(terms).items()))

    def __iter__(self) -> Iterator[Tuple[Term, int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def rank(self) -> int:
        return sum(term.rank * m for term, m in self.terms)

    def multiplicity(self, term: Term) -> int:
        return dict(self.terms).get(term, 0)

    def __add__(self, other: "BundleExpression") -> "BundleExpression":
        if other.space != self.space:
            raise ValueError(f"cannot add bundles on {self.space.value} and {other.space.value}")
        return BundleExpression(space=self.space, terms=self.terms + other.terms)

    def __str__(self) -> str:
        parts = [str(t) if m == 1 else f"{m}*{t}" for t, m in self.terms]
        return " + ".join(parts) if parts else "0"


class ExtensionMarker(str, Enum):
    ZERO = "zero"
    NONZERO = "nonzero"
    UNKNOWN = "unknown"


class FilteredPiece(BaseModel):
    """Graded piece L^exponent placed at fiber degree ``shift``"""
    model_config = ConfigDict(frozen=True)

    exponent: int
    shift: int = 0

    def __str__(self) -> str:
        return f"L^{self.exponent}<{self.shift}>"


class FilteredBundle(BaseModel):
    """Bundle on X- with a filtration whose pieces are line powers.

    ``pieces`` run from the sub-bundle to the last quotient; ``markers[i]``
    describes the extension of pieces i and i+1.
    """
    model_config = ConfigDict(frozen=True)

    pieces: Tuple[FilteredPiece, ...]
    markers: Tuple[ExtensionMarker, ...] = ()
    name: Optional[str] = None

    @model_validator(mode="after")
    def _check(self) -> "FilteredBundle":
        if not self.pieces:
            raise ValueError("a filtered bundle needs at least one piece")
        if len(self.markers) != len(self.pieces) - 1:
            raise ValueError(f"{len(self.pieces)} pieces need {len(self.pieces) - 1} markers, got {len(self.markers)}")
        for i, marker in enumerate(self.markers):
            if marker is ExtensionMarker.NONZERO and not is_receptacle(self.pieces[i], self.pieces[i + 1]):
                raise ValueError(
                    f"nonzero extension between {self.pieces[i]} and {self.pieces[i + 1]} "
                    f"has no one-dimensional Ext receptacle"
                )
        return self

    @classmethod
    def line(cls, exponent: int, shift: int = 0, name: Optional[str] = None) -> "FilteredBundle":
        return cls(pieces=(FilteredPiece(exponent=exponent, shift=shift),), name=name)

    @classmethod
    def trivial(cls) -> "FilteredBundle":
        return cls.line(0, name="O")

    @classmethod
    def sigma(cls) -> "FilteredBundle":
        """L -> Sigma -> L^-2, the quotient one fiber degree up"""
        return cls(
            pieces=(FilteredPiece(exponent=1, shift=0), FilteredPiece(exponent=-2, shift=1)),
            markers=(ExtensionMarker.NONZERO,),
            name="Sigma",
        )

    @property
    def rank(self) -> int:
        return len(self.pieces)

    def dual(self) -> "FilteredBundle":
        pieces = tuple(FilteredPiece(exponent=-p.exponent, shift=-p.shift) for p in reversed(self.pieces))
        name = f"{self.name}^dual" if self.name else None
        return FilteredBundle(pieces=pieces, markers=tuple(reversed(self.markers)), name=name)

    def twist(self, exponent: int, shift: int = 0) -> "FilteredBundle":
        pieces = tuple(FilteredPiece(exponent=p.exponent + exponent, shift=p.shift + shift) for p in self.pieces)
        return FilteredBundle(pieces=pieces, markers=self.markers, name=self.name)

    def __str__(self) -> str:
        out = str(self.pieces[0])
        for marker, piece in zip(self.markers, self.pieces[1:]):
            out += f" -[{marker.value}]- {piece}"
        return out


def is_receptacle(sub: FilteredPiece, quotient: FilteredPiece) -> bool:
    return (sub.exponent - quotient.exponent, quotient.shift - sub.shift) == EXTENSION_RECEPTACLE


class LESMode(str, Enum):
    MIDDLE = "middle"      # A -> B -> C, solve B
    QUOTIENT = "quotient"  # A -> B -> C, solve C


class MapKind(str, Enum):
    FORCED_ZERO = "forced-zero"
    NONZERO_CUP = "nonzero-cup"
    INJECTIVE_H0 = "injective-h0"
    TOP_SURJECTIVE = "top-surjective"
    UNKNOWN = "unknown"


class LESProblem(BaseModel):
    """One graded piece of a short exact sequence A -> B -> C.

    In MIDDLE mode ``known`` holds C and ``rules[i]`` classifies
    delta^i: H^i(C) -> H^(i+1)(A). In QUOTIENT mode ``known`` holds B and
    ``rules[i]`` classifies f^i: H^i(A) -> H^i(B). Missing rules are UNKNOWN.
    """
    model_config = ConfigDict(frozen=True)

    mode: LESMode
    sub: Tuple[int, ...]
    known: Tuple[int, ...]
    rules: Dict[int, MapKind] = Field(default_factory=dict)
    support_dimension: Optional[int] = None
    label: str = ""

    @model_validator(mode="after")
    def _check(self) -> "LESProblem":
        if len(self.sub) != len(self.known):
            raise ValueError(f"dimension tables differ in length: {self.sub} vs {self.known}")
        if not self.sub:
            raise ValueError("dimension tables must cover at least degree 0")
        if self.support_dimension is not None and self.mode is not LESMode.QUOTIENT:
            raise ValueError("support dimension only applies when solving for the quotient")
        return self

    @property
    def top_degree(self) -> int:
        return len(self.sub) - 1

    def rule(self, degree: int) -> MapKind:
        return self.rules.get(degree, MapKind.UNKNOWN)


class Resolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    dimensions: Tuple[int, ...]
    euler_characteristic: int
    cup_firings: Tuple[int, ...] = ()

    @property
    def higher_vanishes(self) -> bool:
        return not any(self.dimensions[1:])


class IndeterminatePosition(BaseModel):
    model_config = ConfigDict(frozen=True)

    degree: int
    map: str
    source_dimension: int
    target_dimension: int
    label: str = ""

    def __str__(self) -> str:
        where = f"{self.label}: " if self.label else ""
        return f"{where}{self.map} in degree {self.degree} ({self.source_dimension} -> {self.target_dimension})"


class Indeterminate(BaseModel):
    """The chase could not fix every rank; the Euler characteristic is still exact"""
    model_config = ConfigDict(frozen=True)

    positions: Tuple[IndeterminatePosition, ...]
    euler_characteristic: int
