"""The three closed bases and the weight conventions used everywhere.

GL4 bases (PV = Gr(1,V), Gr24 = Gr(2,V)): a bundle
Sigma^alpha U^dual (x) Sigma^beta (V/U)^dual has weight (alpha | beta) and its
cohomology is Sigma^(sorted - rho) V^dual. So on PV, L^m <-> (-m | 0,0,0) and
Sym^k (V/L)^dual <-> (0 | k,0,0); on Gr24, Sigma^(a,b) S^dual <-> (a,b | 0,0)
and (wedge^2 S)^m contributes (-m,-m).

LGr: Sigma^(a,b) S^dual <-> (a,b) with rho = (2,1); cohomology is the Sp4
module of highest weight w(v) - rho.
"""
from enum import Enum
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from src.weights.models import RootSystem, Weight


class SpaceTag(str, Enum):
    PV = "PV"
    GR24 = "Gr24"
    LGR = "LGr"


class Space(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: SpaceTag
    group: str
    root_system: RootSystem
    levi_blocks: Tuple[int, ...]
    dimension: int
    canonical_weight: Tuple[int, ...]

    @model_validator(mode="after")
    def _check(self) -> "Space":
        if sum(self.levi_blocks) != self.root_system.rank:
            raise ValueError(f"Levi blocks {self.levi_blocks} do not match {self.root_system}")
        if self.root_system.kind.value == "A":
            levi_roots = sum(b * (b - 1) // 2 for b in self.levi_blocks)
        else:
            # the Levi of the Lagrangian parabolic is GL_n inside Sp_2n
            levi_roots = self.root_system.rank * (self.root_system.rank - 1) // 2
        if self.root_system.positive_root_count - levi_roots != self.dimension:
            raise ValueError(f"dimension {self.dimension} inconsistent with {self.tag.value} root data")
        if len(self.canonical_weight) != self.root_system.rank:
            raise ValueError("canonical weight has the wrong length")
        return self

    @property
    def positive_root_count(self) -> int:
        return self.root_system.positive_root_count

    def weight(self, *entries: int) -> Weight:
        return Weight(entries=tuple(int(e) for e in entries), root_system=self.root_system)

    @property
    def canonical(self) -> Weight:
        return self.weight(*self.canonical_weight)

    def __str__(self) -> str:
        return self.tag.value


PV = Space(
    tag=SpaceTag.PV,
    group="GL4",
    root_system=RootSystem.type_a(4),
    levi_blocks=(1, 3),
    dimension=3,
    canonical_weight=(-4, 0, 0, 0),
)

GR24 = Space(
    tag=SpaceTag.GR24,
    group="GL4",
    root_system=RootSystem.type_a(4),
    levi_blocks=(2, 2),
    dimension=4,
    # (wedge^2 S)^4 twisted by the trivial bundle det V
    canonical_weight=(-2, -2, 2, 2),
)

LGR = Space(
    tag=SpaceTag.LGR,
    group="Sp4",
    root_system=RootSystem.type_c(2),
    levi_blocks=(2,),
    dimension=3,
    canonical_weight=(-3, -3),
)

SPACES: Dict[SpaceTag, Space] = {space.tag: space for space in (PV, GR24, LGR)}


def get_space(tag) -> Space:
    return SPACES[SpaceTag(tag)]


def pv_weight(line_power: int = 0, sym_power: int = 0) -> Weight:
    """Sym^k (V/L)^dual (x) L^m on PV"""
    if sym_power < 0:
        raise ValueError(f"symmetric power must be nonnegative, got {sym_power}")
    return PV.weight(-line_power, sym_power, 0, 0)


def gr_weight(a: int, b: int) -> Weight:
    """Sigma^(a,b) S^dual on Gr(2,V)"""
    return GR24.weight(a, b, 0, 0)


def lgr_weight(a: int, b: int) -> Weight:
    """Sigma^(a,b) S^dual on LGr(V)"""
    return LGR.weight(a, b)


def serre_dual_weight(space: Space, weight: Weight) -> Weight:
    """Weight of E^dual (x) K for the bundle E of ``weight``"""
    return space.canonical - weight.reversed_within_blocks(space.levi_blocks)


CONVENTIONS = {
    "rho": {"A4": [3, 2, 1, 0], "C2": [2, 1]},
    "PV": "Sym^k (V/L)^dual (x) L^m <-> (-m | k,0,0); cohomology Sigma^(w(v)-rho) V^dual",
    "Gr24": "Sigma^(a,b) S^dual <-> (a,b | 0,0); (wedge^2 S)^m adds (-m,-m)",
    "LGr": "Sigma^(a,b) S^dual <-> (a,b), rho_C = (2,1); cohomology is the Sp4 module w(v)-rho_C",
    "canonical": {tag.value: list(space.canonical_weight) for tag, space in SPACES.items()},
}
